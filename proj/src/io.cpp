#include "bergman/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bergman {

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(errc::input_error, "not a rational number: \"" + text + "\"");
  };
  std::string s = text;
  if (s.empty()) return bad();
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto valid_int = [](const std::string& p, bool sign_ok) {
    std::size_t start = (sign_ok && !p.empty() && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
    if (start == p.size()) return false;
    return std::all_of(p.begin() + start, p.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!valid_int(num, true) || !valid_int(den, false)) return bad();
  if (num[0] == '+') num.erase(0, 1);  // cpp_int rejects an explicit plus
  Integer d(den);
  if (d == 0) return bad();
  return Rational(Integer(num), d);
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(errc::input_error,
       "expected a rational as \"p/q\" string or integer, got " + j.dump());
}

std::vector<std::string> string_array(const Json& j, const std::string& what) {
  if (!j.is_array())
    fail(errc::input_error, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& x : j) {
    if (!x.is_string())
      fail(errc::input_error, what + " must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

ElementSet set_from_labels(const GroundSet& ground, const Json& j,
                           const std::string& what) {
  ElementSet s;
  for (const std::string& label : string_array(j, what)) {
    int e = ground.index_of(label);
    if (s.contains(e))
      fail(errc::input_error, what + " repeats the label \"" + label + "\"");
    s = s.with(e);
  }
  return s;
}

Json labels_of(const GroundSet& ground, ElementSet s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(ground.label(e));
  return out;
}

void reject_unknown_fields(const Json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      fail(errc::input_error, "unexpected field \"" + key + "\" in " + where);
}

int int_field(const Json& j, const std::string& key) {
  if (!j.contains(key))
    fail(errc::input_error, "missing field \"" + key + "\"");
  if (!j.at(key).is_number_integer())
    fail(errc::input_error, "field \"" + key + "\" must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

MatroidInput parse_matroid(const Json& j) {
  if (!j.is_object()) fail(errc::input_error, "matroid file must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    fail(errc::input_error, "matroid file needs a \"kind\" string");
  std::string kind = j.at("kind").get<std::string>();

  if (kind == "bases") {
    reject_unknown_fields(j, {"kind", "ground", "bases"}, "matroid file");
    if (!j.contains("ground"))
      fail(errc::input_error, "kind \"bases\" requires \"ground\"");
    if (!j.contains("bases"))
      fail(errc::input_error, "kind \"bases\" requires \"bases\"");
    GroundSet ground(string_array(j.at("ground"), "\"ground\""));
    if (!j.at("bases").is_array())
      fail(errc::input_error, "\"bases\" must be an array");
    std::vector<ElementSet> bases;
    for (const Json& b : j.at("bases"))
      bases.push_back(set_from_labels(ground, b, "a basis"));
    Matroid m = Matroid::from_bases(ground, std::move(bases));
    Json echo;
    echo["ground"] = labels_of(ground, ground.all());
    echo["kind"] = "bases";
    Json blist = Json::array();
    for (ElementSet b : m.bases()) blist.push_back(labels_of(ground, b));
    echo["bases"] = std::move(blist);
    return MatroidInput{std::move(m), std::move(echo)};
  }

  if (kind == "uniform") {
    reject_unknown_fields(j, {"kind", "ground", "r", "n"}, "matroid file");
    int r = int_field(j, "r");
    int n = int_field(j, "n");
    if (n < 1) fail(errc::input_error, "\"n\" must be at least 1");
    GroundSet ground = j.contains("ground")
                           ? GroundSet(string_array(j.at("ground"), "\"ground\""))
                           : GroundSet::numbered(n);
    if (ground.size() != n)
      fail(errc::input_error, "\"ground\" size does not match \"n\"");
    Matroid m = Matroid::uniform(r, ground);
    Json echo;
    echo["ground"] = labels_of(ground, ground.all());
    echo["kind"] = "uniform";
    echo["r"] = r;
    echo["n"] = n;
    return MatroidInput{std::move(m), std::move(echo)};
  }

  if (kind == "graphic") {
    reject_unknown_fields(j, {"kind", "ground", "edges"}, "matroid file");
    if (!j.contains("edges") || !j.at("edges").is_array())
      fail(errc::input_error, "kind \"graphic\" requires an \"edges\" array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Json& e : j.at("edges")) {
      auto ends = string_array(e, "an edge");
      if (ends.size() != 2)
        fail(errc::input_error, "each edge must be a [\"u\",\"v\"] pair");
      edges.emplace_back(ends[0], ends[1]);
    }
    std::optional<GroundSet> ground;
    if (j.contains("ground"))
      ground = GroundSet(string_array(j.at("ground"), "\"ground\""));
    Matroid m = Matroid::graphic(edges, ground);
    Json echo;
    echo["ground"] = labels_of(m.ground(), m.ground_mask());
    echo["kind"] = "graphic";
    Json elist = Json::array();
    for (const auto& [u, v] : edges) elist.push_back(Json::array({u, v}));
    echo["edges"] = std::move(elist);
    return MatroidInput{std::move(m), std::move(echo)};
  }

  fail(errc::input_error, "unknown matroid kind \"" + kind + "\"");
}

Json flag_to_json(const GroundSet& ground, const FlagOfFlats& flag) {
  Json out = Json::array();
  for (const Flat& f : flag.chain()) out.push_back(labels_of(ground, f.set));
  return out;
}

std::string render_flag(const GroundSet& ground, const FlagOfFlats& flag) {
  std::string out = "(";
  for (int j = 0; j <= flag.dim(); ++j) {
    if (j) out += " < ";
    out += render_set(ground, flag.at(j).set);
  }
  return out + ")";
}

Json fan_to_json(const BergmanFan& fan, const Json& matroid_echo) {
  Json out;
  out["matroid"] = matroid_echo;
  out["rank"] = fan.matroid().rank();
  Json cones = Json::array();
  for (const FlagOfFlats& c : fan.cones()) {
    Json cone;
    cone["flats"] = flag_to_json(fan.matroid().ground(), c);
    cone["type"] = c.type();
    cone["dim"] = c.dim();
    cones.push_back(std::move(cone));
  }
  out["cones"] = std::move(cones);
  Json counts;
  for (const auto& [type, count] : fan.counts_by_type())
    counts[type_to_string(type)] = count;
  out["counts_by_type"] = std::move(counts);
  return out;
}

Json relation_to_json(const Matroid& m, const BalancingRelation& rel) {
  Json out;
  out["flag"] = flag_to_json(m.ground(), rel.flag);
  out["i"] = rel.i;
  out["k"] = rel.k;
  Json lhs = Json::array();
  for (const Rational& x : rel.lhs.coords()) lhs.push_back(to_string(x));
  out["lhs"] = std::move(lhs);
  out["zero"] = rel.lhs.is_zero();
  Json terms = Json::array();
  for (const RelationTerm& t : rel.terms) {
    Json term;
    term["part"] = t.kind == RelationTerm::Kind::chain_step  ? "chain"
                   : t.kind == RelationTerm::Kind::middle_sum ? "middle"
                                                              : "constant";
    term["level"] = t.level;
    Json chain = Json::array();
    for (const Flat& f : t.chain) chain.push_back(labels_of(m.ground(), f.set));
    term["chain"] = std::move(chain);
    term["coefficient"] = t.coefficient;
    term["plus"] = labels_of(m.ground(), t.plus.set);
    term["minus"] = labels_of(m.ground(), t.minus.set);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json balance_report_to_json(const BergmanFan& fan, const BalancingReport& report,
                            const Json& matroid_echo) {
  Json out;
  out["matroid"] = matroid_echo;
  out["relations_checked"] = report.relations_checked;
  Json violations = Json::array();
  for (const BalancingRelation& rel : report.violations)
    violations.push_back(relation_to_json(fan.matroid(), rel));
  out["violations"] = std::move(violations);
  Json by_type;
  for (const auto& [type, cells] : report.by_type) {
    Json per;
    for (const auto& [ik, count] : cells)
      per["(i=" + std::to_string(ik.first) + ",k=" + std::to_string(ik.second) +
          ")"] = count;
    by_type[type_to_string(type)] = std::move(per);
  }
  out["by_type"] = std::move(by_type);
  Json nontrivial = Json::array();
  for (const ConeType& t : report.nontrivial_types)
    nontrivial.push_back(type_to_string(t));
  out["nontrivial_types"] = std::move(nontrivial);
  return out;
}

WeightFunction parse_weights(const Json& j, const Skeleton& s) {
  if (!j.is_object() || !j.contains("k") || !j.contains("weights"))
    fail(errc::input_error, "weight file needs \"k\" and \"weights\"");
  reject_unknown_fields(j, {"k", "weights"}, "weight file");
  if (int_field(j, "k") != s.k())
    fail(errc::domain_mismatch, "weight file is for k=" +
                                    std::to_string(int_field(j, "k")) +
                                    ", skeleton has k=" + std::to_string(s.k()));
  if (!j.at("weights").is_array())
    fail(errc::input_error, "\"weights\" must be an array");
  std::vector<Rational> values(s.cells().size());
  std::vector<bool> seen(s.cells().size(), false);
  for (const Json& entry : j.at("weights")) {
    if (!entry.is_object() || !entry.contains("flats") || !entry.contains("value"))
      fail(errc::input_error, "each weight entry needs \"flats\" and \"value\"");
    reject_unknown_fields(entry, {"flats", "value"}, "a weight entry");
    if (!entry.at("flats").is_array())
      fail(errc::input_error, "\"flats\" must be an array of flats");
    std::vector<ElementSet> sets;
    for (const Json& f : entry.at("flats"))
      sets.push_back(set_from_labels(s.matroid().ground(), f, "a flat"));
    int cell = s.cell_index(flag_of_flats(s.matroid(), sets));
    if (seen[cell])
      fail(errc::domain_mismatch, "weight file lists a cell twice");
    seen[cell] = true;
    values[cell] = rational_from_json(entry.at("value"));
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    fail(errc::domain_mismatch, "weight file does not cover every cell");
  return WeightFunction(s, std::move(values));
}

Json weights_to_json(const Skeleton& s, const WeightFunction& w) {
  Json out;
  out["k"] = s.k();
  Json weights = Json::array();
  for (std::size_t c = 0; c < s.cells().size(); ++c) {
    Json entry;
    entry["flats"] = flag_to_json(s.matroid().ground(), s.cells()[c]);
    entry["value"] = to_string(w[static_cast<int>(c)]);
    weights.push_back(std::move(entry));
  }
  out["weights"] = std::move(weights);
  return out;
}

Json weight_basis_to_json(const Skeleton& s, const WeightBasis& b) {
  Json out;
  out["dim"] = b.dim;
  Json basis = Json::array();
  for (const WeightFunction& w : b.basis) basis.push_back(weights_to_json(s, w));
  out["basis"] = std::move(basis);
  return out;
}

RationalVector parse_point(const std::string& text, int n) {
  std::vector<Rational> coords;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) coords.push_back(parse_rational(item));
  if (static_cast<int>(coords.size()) != n)
    fail(errc::dimension_mismatch, "point has " + std::to_string(coords.size()) +
                                       " coordinates, the ground set has " +
                                       std::to_string(n));
  return RationalVector(std::move(coords));
}

std::string render_lattice(const Matroid& m) {
  std::vector<Flat> flats = m.flats();
  std::ostringstream out;
  for (int r = m.rank(); r >= flats.front().rank; --r) {
    out << "rank " << r << ":";
    for (const Flat& f : flats)
      if (f.rank == r) out << " " << render_set(m.ground(), f.set);
    out << "\n";
  }
  Flat top{m.ground_mask(), m.rank()};
  std::vector<std::pair<Flat, Flat>> edges;
  for (const Flat& f : flats)
    if (f.rank < m.rank())
      for (const Flat& c : m.covers_within(f, top)) edges.emplace_back(f, c);
  out << "cover edges (" << edges.size() << "):\n";
  for (const auto& [f, c] : edges)
    out << "  " << render_set(m.ground(), f.set) << " < "
        << render_set(m.ground(), c.set) << "\n";
  return out.str();
}

}  // namespace bergman
