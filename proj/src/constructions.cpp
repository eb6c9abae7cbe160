#include "cantor/constructions.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cantor {

namespace {

Rational param_or(const Params& params, const std::string& key, const Rational& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

long small_integer_param(const Params& params, const std::string& key, long fallback) {
  const Rational v = param_or(params, key, Rational(fallback));
  if (!v.is_integer() || v.num() > 64 || v.num() < -64)
    throw std::invalid_argument("parameter \"" + key + "\" must be a small integer");
  return v.num().get_si();
}

// Octagon with every corner of the unit square cut at offset `cut` along both
// axes; vertices (cut,0), (0,cut), ..., (1,1-cut), (1-cut,1).
Region octagon_region(const Rational& cut) {
  if (cut.sign() <= 0 || cut >= Rational(1, 2))
    throw std::invalid_argument("octagon: cut must lie in (0, 1/2)");
  Region region{unit_square_halfplanes()};
  region.primitives.push_back(HalfPlane{-1, -1, -cut});                    // x + y >= cut
  region.primitives.push_back(HalfPlane{1, 1, Rational(2) - cut});        // x + y <= 2 - cut
  region.primitives.push_back(HalfPlane{1, -1, Rational(1) - cut});       // x - y <= 1 - cut
  region.primitives.push_back(HalfPlane{-1, 1, Rational(1) - cut});       // y - x <= 1 - cut
  return region;
}

// Diameter of that octagon: opposite cut vertices, sqrt(1 + (1-2*cut)^2).
SqrtDiameter octagon_diameter(const Rational& cut) {
  const Rational chord = Rational(1) - cut - cut;
  return simplified_sqrt(Rational(1), Rational(1) + chord.squared());
}

CoverSpec base_spec(std::string name) {
  CoverSpec spec;
  spec.name = std::move(name);
  spec.root = GridSquare{0, 0, 1};
  return spec;
}

IntervalDiameter correction_region_diameter() {
  // Chord between the two arc endpoints on opposite edges of the unit
  // square: sqrt((2*sqrt(633)/3 - 9)^2 + 81)/9, enclosed outward.
  const Enclosure root633 = Enclosure::sqrt(Enclosure::from_rational(Rational(633)));
  const Enclosure leg = root633.mul_rational(Rational(2, 3)).add_rational(Rational(-9));
  const Enclosure d2 = leg * leg + Enclosure::from_integer(81);
  const Enclosure d = Enclosure::sqrt(d2).div_rational(Rational(9));
  return IntervalDiameter{d.lo(), d.hi()};
}

}  // namespace

std::vector<Primitive> unit_square_halfplanes() {
  return {HalfPlane{-1, 0, 0},   // x >= 0
          HalfPlane{1, 0, 1},    // x <= 1
          HalfPlane{0, -1, 0},   // y >= 0
          HalfPlane{0, 1, 1}};   // y <= 1
}

std::vector<std::string> catalog() {
  return {"basic-interval", "octagon-fixed", "octagon-series",
          "circle-big",     "circle-series", "correction-region"};
}

Rational series_fraction_limit(int k) {
  if (k < 2) throw std::invalid_argument("series fraction: k must be >= 2");
  const mpz_class four_k = int_pow(4, static_cast<unsigned long>(k));
  return Rational(four_k - 6, four_k - 2);
}

Rational series_fraction_oracle(int k, int terms) {
  if (k < 2) throw std::invalid_argument("series fraction: k must be >= 2");
  if (terms < 1) throw std::invalid_argument("series fraction: terms must be >= 1");
  Rational sum(0);
  for (int i = 1; i <= terms; ++i) {
    const mpz_class num = int_pow(2, static_cast<unsigned long>(i - 1));
    const mpz_class den = int_pow(4, static_cast<unsigned long>(k) * i);
    sum += Rational(num, den);
  }
  return Rational(1) - Rational(4) * sum;
}

CoverSpec build(const std::string& name, const Params& params) {
  if (name == "basic-interval") {
    const long n = small_integer_param(params, "n", 2);
    if (n < 1) throw std::invalid_argument("basic-interval: n must be >= 1");
    const Rational side = rational_pow(Rational(1, 3), n - 1);
    CoverSpec spec = base_spec(name);
    spec.region.primitives = {HalfPlane{-1, 0, 0}, HalfPlane{1, 0, side},
                              HalfPlane{0, -1, 0}, HalfPlane{0, 1, side}};
    spec.diameter = simplified_sqrt(side, Rational(2));
    spec.recommended_level = static_cast<int>(n);
    spec.params["n"] = Rational(n);
    return spec;
  }
  if (name == "octagon-fixed") {
    const Rational cut(2, 27);
    CoverSpec spec = base_spec(name);
    spec.region = octagon_region(cut);
    spec.diameter = octagon_diameter(cut);
    spec.recommended_level = 4;
    spec.params["cut"] = cut;
    return spec;
  }
  if (name == "octagon-series") {
    const long k = small_integer_param(params, "k", 3);
    if (k < 2)
      throw std::invalid_argument(
          "octagon-series: k must be an integer >= 2 (k = 1 is infeasible: the corner "
          "offset sum 1/(3^k - 1) would be 1/2, exceeding the quarter-side limit 1/4)");
    const Rational x(mpz_class(1), int_pow(3, static_cast<unsigned long>(k)) - 1);
    const Rational cut = x + x;
    CoverSpec spec = base_spec(name);
    spec.region = octagon_region(cut);
    spec.diameter = octagon_diameter(cut);
    spec.recommended_level = static_cast<int>(std::min<long>(3 * k, 12));
    spec.params["k"] = Rational(k);
    spec.params["x"] = x;
    spec.params["cut"] = cut;
    spec.params["fraction_limit"] = series_fraction_limit(static_cast<int>(k));
    return spec;
  }
  if (name == "circle-big") {
    CoverSpec spec = base_spec(name);
    spec.region.primitives = unit_square_halfplanes();
    const Rational r2(629, 1458);
    spec.region.primitives.push_back(Disk{Point{Rational(1, 2), Rational(1, 2)}, r2});
    spec.diameter = simplified_sqrt(Rational(2), r2);  // 2r
    spec.recommended_level = 10;
    spec.params["r2"] = r2;
    return spec;
  }
  if (name == "circle-series") {
    CoverSpec spec = base_spec(name);
    spec.region.primitives = unit_square_halfplanes();
    const Rational r2(290, 676);
    spec.region.primitives.push_back(Disk{Point{Rational(1, 2), Rational(1, 2)}, r2});
    spec.diameter = simplified_sqrt(Rational(2), r2);  // 2r
    spec.recommended_level = 9;
    spec.params["r2"] = r2;
    spec.params["phi"] = Rational(1, 26);
    return spec;
  }
  if (name == "correction-region") {
    CoverSpec spec = base_spec(name);
    spec.region.primitives = unit_square_halfplanes();
    const Rational r2(1258, 729);
    const Rational lo(2, 27), hi(25, 27);
    for (const auto& [cx, cy] : {std::pair{lo, Rational(0)}, std::pair{lo, Rational(1)},
                                 std::pair{hi, Rational(1)}, std::pair{hi, Rational(0)}})
      spec.region.primitives.push_back(Disk{Point{cx, cy}, r2});
    spec.diameter = correction_region_diameter();
    spec.recommended_level = 8;
    spec.params["r2"] = r2;
    return spec;
  }
  throw std::invalid_argument("unknown construction \"" + name + "\"");
}

Fixture reference_fixture(const std::string& name, const Params& params) {
  Fixture fx;
  fx.name = name;
  if (name == "basic-interval") {
    const long n = small_integer_param(params, "n", 2);
    if (n < 1) throw std::invalid_argument("basic-interval: n must be >= 1");
    fx.fraction = rational_pow(Rational(1, 4), n - 1);
    fx.diameter = simplified_sqrt(rational_pow(Rational(1, 3), n - 1), Rational(2));
    fx.expected_bound = 1.548563;
    return fx;
  }
  if (name == "octagon-fixed") {
    fx.fraction = Rational(15, 16);
    fx.diameter = simplified_sqrt(Rational(1, 27), Rational(1258));
    fx.expected_bound = 1.504975;
    return fx;
  }
  if (name == "octagon-series") {
    const long k = small_integer_param(params, "k", 3);
    const CoverSpec spec = build(name, params);  // validates k, supplies the diameter
    fx.fraction = series_fraction_limit(static_cast<int>(k));
    fx.diameter = spec.diameter;
    switch (k) {
      case 2: fx.expected_bound = 1.611653; break;
      case 3: fx.expected_bound = 1.502878; break;
      case 4: fx.expected_bound = 1.524502; break;
      case 5: fx.expected_bound = 1.538520; break;
      default:
        throw std::invalid_argument("octagon-series: no recorded bound for k = " +
                                    std::to_string(k));
    }
    return fx;
  }
  if (name == "circle-big") {
    fx.fraction = Rational(30755, 32768);
    fx.diameter = simplified_sqrt(Rational(1, 27), Rational(1258));
    fx.expected_bound = 1.503263;
    return fx;
  }
  if (name == "circle-series") {
    fx.fraction = Rational(15331, 16384);
    fx.diameter = simplified_sqrt(Rational(1, 13), Rational(290));
    fx.expected_bound = 1.502483;
    return fx;
  }
  if (name == "correction-region") {
    fx.fraction = Rational(1925, 2048);
    fx.diameter = correction_region_diameter();
    fx.expected_bound = 1.512163;
    return fx;
  }
  throw std::invalid_argument("unknown construction \"" + name + "\"");
}

namespace {

Rational json_rational(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw std::invalid_argument(std::string("cover spec JSON: missing rational field \"") + key +
                                "\"");
  return Rational::parse(j[key].get<std::string>());
}

}  // namespace

CoverSpec load_cover_spec_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cover spec JSON: ") + e.what());
  }

  CoverSpec spec;
  spec.name = j.value("name", std::string("custom"));
  spec.recommended_level = j.value("recommended_level", 6);

  if (!j.contains("root") || !j.contains("primitives") || !j.contains("diameter"))
    throw std::invalid_argument("cover spec JSON: requires root, primitives, diameter");

  spec.root = GridSquare{json_rational(j["root"], "x0"), json_rational(j["root"], "y0"),
                         json_rational(j["root"], "side")};
  validate(spec.root);

  if (!j["primitives"].is_array() || j["primitives"].empty())
    throw std::invalid_argument("cover spec JSON: primitives must be a non-empty array");
  for (const auto& pj : j["primitives"]) {
    const std::string kind = pj.value("kind", "");
    if (kind == "disk") {
      spec.region.primitives.push_back(
          Disk{Point{json_rational(pj, "cx"), json_rational(pj, "cy")}, json_rational(pj, "r2")});
    } else if (kind == "halfplane") {
      HalfPlane hp{json_rational(pj, "a"), json_rational(pj, "b"), json_rational(pj, "c")};
      const std::string sense = pj.value("sense", "le");
      if (sense == "ge") {
        hp = HalfPlane{-hp.a, -hp.b, -hp.c};
      } else if (sense != "le") {
        throw std::invalid_argument("cover spec JSON: sense must be \"le\" or \"ge\"");
      }
      spec.region.primitives.push_back(hp);
    } else {
      throw std::invalid_argument("cover spec JSON: primitive kind must be disk or halfplane");
    }
  }
  validate(spec.region);

  const auto& dj = j["diameter"];
  const std::string kind = dj.value("kind", "");
  if (kind == "sqrt") {
    spec.diameter = simplified_sqrt(json_rational(dj, "scale"), json_rational(dj, "radicand"));
  } else if (kind == "interval") {
    if (!dj.contains("lo") || !dj.contains("hi"))
      throw std::invalid_argument("cover spec JSON: interval diameter requires lo and hi");
    spec.diameter =
        IntervalDiameter{BigFloat::from_decimal(dj["lo"].get<std::string>(), MPFR_RNDD),
                         BigFloat::from_decimal(dj["hi"].get<std::string>(), MPFR_RNDU)};
  } else {
    throw std::invalid_argument("cover spec JSON: diameter kind must be sqrt or interval");
  }
  diameter_enclosure(spec.diameter);  // validates positivity
  return spec;
}

CoverSpec load_cover_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cover spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_cover_spec_json(buf.str());
}

}  // namespace cantor
