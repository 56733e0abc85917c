// Command-line surface over the cycdiv core library. Every subcommand
// emits either a plain-text summary or a machine-readable JSON/CSV record;
// factored input syntax "2^1.3^1.5^1" keeps huge witness indices lossless.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycdiv/bounds.hpp"
#include "cycdiv/constructions.hpp"
#include "cycdiv/cyclotomic.hpp"
#include "cycdiv/divisor_search.hpp"
#include "cycdiv/json_io.hpp"

using namespace cycdiv;

namespace {

FactoredInt parse_index(const std::string& text) {
  if (text.find('^') == std::string::npos) return FactoredInt::from_value(Int(text));
  std::vector<std::pair<Int, unsigned>> fs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string part = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    std::size_t caret = part.find('^');
    if (caret == std::string::npos)
      throw PreconditionViolated("expected p^e in factored integer: " + part);
    fs.emplace_back(Int(part.substr(0, caret)),
                    static_cast<unsigned>(std::stoul(part.substr(caret + 1))));
    pos = dot == std::string::npos ? text.size() : dot + 1;
  }
  return FactoredInt::from_factors(std::move(fs), true);
}

std::string series_to_plain(const IntSeries& s) {
  std::string out = "[";
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (i) out += ", ";
    out += s[i].str();
  }
  return out + "]";
}

struct Options {
  std::string format = "plain";
  unsigned workers = 1;
  std::uint64_t budget = std::uint64_t(1) << 20;
  std::uint64_t poly_budget = std::uint64_t(1) << 14;
  std::string cap = "1000000";
  std::optional<std::size_t> trunc_cap;

  SearchConfig search() const {
    SearchConfig cfg;
    cfg.subset_budget = budget;
    cfg.poly_budget = poly_budget;
    cfg.workers = workers;
    cfg.cyc.materialization_cap = Int(cap);
    return cfg;
  }
};

void print_search(const SearchResult& res, std::optional<std::size_t> r,
                  const Options& opt) {
  if (opt.format == "json") {
    std::cout << search_result_to_json(res, r).dump() << "\n";
    return;
  }
  std::cout << (r ? "H(" + std::to_string(*r) + "," : "B(")
            << res.witness.n.value().str() << ") = " << res.value.str()
            << "  witness S = {";
  bool first = true;
  for (const FactoredInt& m : res.witness.members()) {
    if (!first) std::cout << ", ";
    std::cout << m.value().str();
    first = false;
  }
  std::cout << "}\n";
}

void print_witness(const WitnessReport& rep, const Options& opt) {
  if (opt.format == "json") {
    std::cout << witness_report_to_json(rep).dump() << "\n";
    return;
  }
  std::cout << "indices:";
  for (const FactoredInt& m : rep.product.indices) std::cout << " " << m.value().str();
  std::cout << "\norder_l: " << rep.product.order_l.value().str()
            << "\ntruncation: " << series_to_plain(rep.truncation) << "\nclaims:";
  for (const WitnessClaim& c : rep.claims)
    std::cout << " " << c.name << "=" << (c.pass ? "pass" : "FAIL");
  std::cout << "\n";
}

std::string rat_str(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

void print_bound_csv_header() {
  std::cout << "r,n,d_n,H_rn,dominance_bound,leading_term,ratio\n";
}

void print_bound_csv(const BoundReport& b) {
  std::cout << b.r << "," << b.n.value().str() << "," << b.d_n.str() << ","
            << (b.observed ? b.observed->str() : "") << "," << rat_str(b.exact_bound)
            << "," << rat_str(b.leading) << ","
            << (b.ratio ? rat_str(*b.ratio) : "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisors of x^n - 1: cyclotomic arithmetic, height search, witnesses"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--workers", opt.workers, "Worker threads for subset search");
  app.add_option("--budget", opt.budget, "Max subsets for truncated search");
  app.add_option("--poly-budget", opt.poly_budget, "Max subsets for full-poly search");
  app.add_option("--cap", opt.cap, "Materialization cap (max full-poly index)");

  std::string n_arg, n2_arg;
  std::size_t r_arg = 0;

  auto* cyclo = app.add_subcommand("cyclo", "Compute phi_N, full or truncated");
  std::optional<std::size_t> trunc_r;
  cyclo->add_option("N", n_arg, "Index (decimal or p^e.p^e factored form)")->required();
  cyclo->add_option("--trunc", trunc_r, "Truncation order (mod x^{R+1})");

  auto* factorx = app.add_subcommand("factor-x", "Factor x^N - 1 into cyclotomics");
  factorx->add_option("N", n_arg)->required();

  auto* bn = app.add_subcommand("bn", "B(N): max height over divisors of x^N - 1");
  bn->add_option("N", n_arg)->required();

  auto* hrn = app.add_subcommand("hrn", "H(R,N): max |coefficient R| over divisors");
  hrn->add_option("R", r_arg)->required();
  hrn->add_option("N", n_arg)->required();

  auto* witness = app.add_subcommand("witness", "Constructive witness generators");
  witness->require_subcommand(1);
  auto* wprefix = witness->add_subcommand("prefix", "Divisor with prescribed coefficients 1..r");
  std::vector<long long> prefix_target;
  wprefix->add_option("coeffs", prefix_target, "Comma-separated targets c1,c2,...")
      ->required()
      ->delimiter(',');
  auto* wsuzuki = witness->add_subcommand("suzuki", "Divisor with m factors covering {-n..n}");
  std::size_t suzuki_m = 1;
  std::uint64_t suzuki_n = 1;
  wsuzuki->add_option("M", suzuki_m)->required();
  wsuzuki->add_option("N", suzuki_n)->required();
  std::optional<std::size_t> wcap;
  witness->add_option("--trunc-cap", wcap, "Override witness verification order");

  auto* extremal = app.add_subcommand("extremal", "f_k over the k-th primorial");
  unsigned ext_k = 1;
  std::optional<std::size_t> ext_r;
  extremal->add_option("K", ext_k)->required();
  extremal->add_option("--r", ext_r, "Also report coefficient r of f_k");

  auto* boundscmd = app.add_subcommand("bounds", "Dominance-bound grids (CSV)");
  std::size_t bounds_r = 1;
  std::uint64_t bounds_nmax = 0, bounds_kmax = 0;
  bool bounds_lower = false;
  boundscmd->add_option("--r", bounds_r)->required();
  boundscmd->add_option("--n-max", bounds_nmax, "Upper-bound grid over n");
  boundscmd->add_option("--k-max", bounds_kmax, "Lower-bound grid over primorial rank k");
  boundscmd->add_flag("--lower", bounds_lower, "Run the lower-bound (f_k) side");

  auto* survey = app.add_subcommand("survey", "Exploratory statistics table");
  std::uint64_t survey_nmax = 0;
  survey->add_option("--n-max", survey_nmax)->required();

  // Let the global options (--format etc.) appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    SearchConfig cfg = opt.search();
    if (*cyclo) {
      FactoredInt n = parse_index(n_arg);
      if (trunc_r) {
        IntSeries s = cyclotomic_trunc(n, *trunc_r);
        if (opt.format == "json")
          std::cout << json{{"n", int_to_json(n.value())},
                            {"order", *trunc_r},
                            {"coefficients", series_to_json(s)}}
                           .dump()
                    << "\n";
        else
          std::cout << series_to_plain(s) << "\n";
      } else {
        IntPoly p = cyclotomic(n, cfg.cyc);
        std::cout << p.to_list_string() << "\n";
      }
    } else if (*factorx) {
      FactoredInt n = parse_index(n_arg);
      for (const auto& [d, phi] : factor_xn_minus_1(n, cfg.cyc)) {
        if (opt.format == "json")
          std::cout << json{{"d", int_to_json(d.value())},
                            {"phi", json::parse(phi.to_list_string())}}
                           .dump()
                    << "\n";
        else
          std::cout << "phi_" << d.value().str() << " = " << phi.to_list_string() << "\n";
      }
    } else if (*bn) {
      print_search(big_B(parse_index(n_arg), cfg), std::nullopt, opt);
    } else if (*hrn) {
      print_search(big_H(r_arg, parse_index(n_arg), cfg), r_arg, opt);
    } else if (*wprefix) {
      print_witness(prefix_witness(prefix_target), opt);
    } else if (*wsuzuki) {
      print_witness(suzuki_witness(suzuki_m, suzuki_n, wcap), opt);
    } else if (*extremal) {
      CycProduct fk = extremal_fk(ext_k);
      json out{{"k", ext_k},
               {"n_k", int_to_json(primorial(ext_k).value())},
               {"index_count", fk.indices.size()}};
      json idx = json::array();
      for (const FactoredInt& m : fk.indices) idx.push_back(int_to_json(m.value()));
      out["indices"] = idx;
      if (ext_r) out["coefficient"] = int_to_json(extremal_coeff(ext_k, *ext_r));
      if (opt.format == "json") {
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "f_" << ext_k << ": " << fk.indices.size() << " indices over n_k="
                  << primorial(ext_k).value().str();
        if (ext_r)
          std::cout << ", coefficient " << *ext_r << " = "
                    << extremal_coeff(ext_k, *ext_r).str();
        std::cout << "\n";
      }
    } else if (*boundscmd) {
      print_bound_csv_header();
      if (bounds_lower) {
        if (bounds_kmax == 0)
          throw PreconditionViolated("--lower needs --k-max");
        for (unsigned k = static_cast<unsigned>(bounds_r); k <= bounds_kmax; ++k)
          print_bound_csv(check_lower(bounds_r, k, cfg));
      } else {
        if (bounds_nmax == 0) throw PreconditionViolated("need --n-max");
        for (std::uint64_t n = 1; n <= bounds_nmax; ++n)
          print_bound_csv(check_upper(bounds_r, FactoredInt::from_u64(n), cfg));
      }
    } else if (*survey) {
      std::cout << "n,d_n,B_n,ramanujan_exponent,height_growth_stat\n";
      for (std::uint64_t nv = 3; nv <= survey_nmax; ++nv) {
        FactoredInt n = FactoredInt::from_u64(nv);
        Int dn = divisor_count(n);
        std::string b_str, growth_str;
        if (dn < 63 && (std::uint64_t(1) << to_u64(dn)) <= cfg.poly_budget) {
          Int b = big_B(n, cfg).value;
          b_str = b.str();
          if (auto g = height_growth_stat(n, b)) growth_str = g->str(6);
        }
        std::cout << nv << "," << dn.str() << "," << b_str << ","
                  << ramanujan_stat(n).str(6) << "," << growth_str << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";  // what() carries the error name prefix
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
