#include "cycdiv/json_io.hpp"

#include "cycdiv/errors.hpp"

namespace cycdiv {

namespace {
const Int kSafeMax = (Int(1) << 53);
}

json int_to_json(const Int& v) {
  if (v >= -kSafeMax && v <= kSafeMax) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw PreconditionViolated("expected an integer or decimal string");
}

json factored_to_json(const FactoredInt& n) {
  json factors = json::array();
  for (const auto& [p, e] : n.factors()) factors.push_back({int_to_json(p), e});
  return json{{"value", int_to_json(n.value())}, {"factors", factors}};
}

FactoredInt factored_from_json(const json& j) {
  std::vector<std::pair<Int, unsigned>> fs;
  for (const auto& f : j.at("factors"))
    fs.emplace_back(int_from_json(f.at(0)), f.at(1).get<unsigned>());
  FactoredInt n = FactoredInt::from_factors(std::move(fs), false);
  if (j.contains("value") && int_from_json(j.at("value")) != n.value())
    throw PreconditionViolated("factored integer value does not match its factors");
  return n;
}

json series_to_json(const IntSeries& s) {
  json arr = json::array();
  for (const Int& c : s.coefficients()) arr.push_back(int_to_json(c));
  return arr;
}

IntSeries series_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw PreconditionViolated("series must be a nonempty array");
  IntSeries s(j.size() - 1);
  for (std::size_t i = 0; i < j.size(); ++i) s[i] = int_from_json(j[i]);
  return s;
}

json search_result_to_json(const SearchResult& res, std::optional<std::size_t> r) {
  json subset = json::array();
  for (const FactoredInt& m : res.witness.members()) subset.push_back(int_to_json(m.value()));
  json out{{"n", int_to_json(res.witness.n.value())},
           {"value", int_to_json(res.value)},
           {"witness_subset", subset}};
  if (r) out["r"] = *r;
  return out;
}

SearchResult search_result_from_json(const json& j) {
  FactoredInt n = FactoredInt::from_value(int_from_json(j.at("n")));
  std::vector<Int> members;
  for (const auto& m : j.at("witness_subset")) members.push_back(int_from_json(m));
  SearchResult res;
  res.witness = DivisorSubset::of_members(std::move(n), members);
  res.value = int_from_json(j.at("value"));
  return res;
}

json witness_report_to_json(const WitnessReport& w) {
  json indices = json::array();
  for (const FactoredInt& m : w.product.indices) {
    json fs = json::array();
    for (const auto& [p, e] : m.factors()) fs.push_back({int_to_json(p), e});
    indices.push_back(fs);
  }
  json claims = json::array();
  for (const WitnessClaim& c : w.claims) claims.push_back({{"name", c.name}, {"pass", c.pass}});
  return json{{"indices", indices},
              {"order_l", factored_to_json(w.product.order_l)},
              {"truncation", series_to_json(w.truncation)},
              {"claims", claims}};
}

WitnessReport witness_report_from_json(const json& j) {
  std::vector<FactoredInt> indices;
  for (const auto& idx : j.at("indices")) {
    std::vector<std::pair<Int, unsigned>> fs;
    for (const auto& f : idx) fs.emplace_back(int_from_json(f.at(0)), f.at(1).get<unsigned>());
    indices.push_back(FactoredInt::from_factors(std::move(fs), false));
  }
  WitnessReport w;
  w.product = CycProduct::of(std::move(indices));
  if (!(w.product.order_l == factored_from_json(j.at("order_l"))))
    throw PreconditionViolated("order_l does not match the lcm of the indices");
  w.truncation = series_from_json(j.at("truncation"));
  for (const auto& c : j.at("claims"))
    w.claims.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>()});
  return w;
}

json bound_report_to_json(const BoundReport& b) {
  auto rat = [](const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
  };
  json out{{"r", b.r},
           {"n", int_to_json(b.n.value())},
           {"d_n", int_to_json(b.d_n)},
           {"dominance_bound", rat(b.exact_bound)},
           {"leading_term", rat(b.leading)},
           {"ok", b.ok}};
  if (b.observed) out["observed"] = int_to_json(*b.observed);
  if (b.ratio) out["ratio"] = rat(*b.ratio);
  return out;
}

}  // namespace cycdiv
