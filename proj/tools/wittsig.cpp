// Command-line front end: decide triviality of Witt classes, dump signature
// step functions, evaluate classes at roots of unity, and generate the test
// families.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "wittsig/decide.hpp"
#include "wittsig/errors.hpp"
#include "wittsig/io.hpp"

namespace {

using namespace wittsig;

long start_precision_from_env() {
  const char* v = std::getenv("WITTSIG_PRECISION_START");
  if (!v) return 64;
  char* end = nullptr;
  const long bits = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || bits < 8)
    throw ValidationError("WITTSIG_PRECISION_START must be an integer >= 8");
  return bits;
}

// Minimal expression parser for --diag entries: sums of rational multiples of
// powers of z = zeta_m, e.g. "z+z^-1", "1/2*z^2 - 3".
class DiagParser {
 public:
  DiagParser(std::string text, long m) : s_(std::move(text)), m_(m) {}

  CyclotomicNumber parse() {
    CyclotomicNumber v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string s_;
  size_t pos_ = 0;
  long m_;

  [[noreturn]] void fail(const std::string& why) {
    throw ValidationError("cannot parse diagonal entry '" + s_ + "': " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  CyclotomicNumber factor() {
    skip_ws();
    if (eat('(')) {
      CyclotomicNumber v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'z' || s_[pos_] == 'Z')) {
      ++pos_;
      long e = 1;
      if (eat('^')) e = integer();
      return CyclotomicNumber::root_of_unity(m_, e);
    }
    // rational literal p or p/q
    const long p = integer();
    if (eat('/')) {
      const long q = integer();
      if (q == 0) fail("zero denominator");
      return CyclotomicNumber(Rational(p, q));
    }
    return CyclotomicNumber(Rational(p));
  }
  CyclotomicNumber term() {
    CyclotomicNumber v = factor();
    while (eat('*')) v *= factor();
    return v;
  }
  CyclotomicNumber expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    CyclotomicNumber v = term();
    if (neg) v = -v;
    for (;;) {
      skip_ws();
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else break;
    }
    return v;
  }
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"exact signature invariants for hermitian forms over cyclotomic function fields"};
  app.require_subcommand(1);
  int max_refine = 12;
  app.add_option("--max-refine", max_refine, "refinement budget (doublings / extra depth rounds)")
      ->capture_default_str();

  std::string path, out_format = "json";
  long emb_k = 1;
  std::vector<long> point;

  auto* cmd_decide = app.add_subcommand("decide", "decide whether a form file is trivial");
  cmd_decide->add_option("path", path, "form file")->required();

  auto* cmd_sigfn = app.add_subcommand("sigfn", "signature step function of a form file");
  cmd_sigfn->add_option("path", path, "form file")->required();
  cmd_sigfn->add_option("--embedding", emb_k, "embedding exponent k (coprime to m)")->required();
  cmd_sigfn->add_option("--out", out_format, "json|csv")->capture_default_str();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate the class at t = zeta_N^j");
  cmd_eval->add_option("path", path, "form file")->required();
  cmd_eval->add_option("--embedding", emb_k, "embedding exponent k (coprime to m)")->required();
  cmd_eval->add_option("--point", point, "N j")->expected(2)->required();

  auto* cmd_embeddings = app.add_subcommand("embeddings", "list the G_0 embedding exponents");
  long emb_m = 1;
  cmd_embeddings->add_option("--m", emb_m, "conductor")->required();

  auto* cmd_gen = app.add_subcommand("gen", "generate a form file");
  std::string kind;
  cmd_gen->add_option("kind", kind, "metabolic | canonical | constant")->required();
  int gen_n = 1;
  long gen_m = 1;
  unsigned long gen_seed = 0;
  std::string gen_r0 = "0";
  std::vector<std::string> gen_blocks;
  std::string gen_diag;
  cmd_gen->add_option("--n", gen_n, "half rank (metabolic)");
  cmd_gen->add_option("--m", gen_m, "conductor (metabolic, constant)");
  cmd_gen->add_option("--seed", gen_seed, "random seed (metabolic)");
  cmd_gen->add_option("--r0", gen_r0, "constant multiplicity r0 (canonical)");
  cmd_gen->add_option("--block", gen_blocks, "canonical block d:j=r, meaning z = zeta_d^j with coefficient r");
  cmd_gen->add_option("--diag", gen_diag, "comma-separated diagonal entries in z = zeta_m (constant)");

  CLI11_PARSE(app, argc, argv);

  const Budget budget = Budget::with_refine_limit(start_precision_from_env(), max_refine);

  if (cmd_decide->parsed()) {
    const WittElement w = load_form_file(path);
    print_json(to_json(is_trivial(w, budget)));
    return 0;
  }
  if (cmd_sigfn->parsed()) {
    const WittElement w = load_form_file(path);
    if (emb_k < 0 || gcd_long(((emb_k % w.conductor()) + w.conductor()) % w.conductor(),
                              w.conductor()) != 1)
      throw ValidationError("embedding exponent " + std::to_string(emb_k) +
                            " is not coprime to m = " + std::to_string(w.conductor()));
    const Embedding rho(w.conductor(), emb_k);
    const SignatureStepFunction s = signature_step_function(w, rho, budget);
    if (out_format == "csv")
      std::cout << step_function_csv(s);
    else if (out_format == "json")
      print_json(to_json(s));
    else
      throw ValidationError("--out must be json or csv");
    return 0;
  }
  if (cmd_eval->parsed()) {
    const WittElement w = load_form_file(path);
    if (gcd_long(((emb_k % w.conductor()) + w.conductor()) % w.conductor(), w.conductor()) != 1)
      throw ValidationError("embedding exponent " + std::to_string(emb_k) +
                            " is not coprime to m = " + std::to_string(w.conductor()));
    if (point[0] < 1) throw ValidationError("point order N must be >= 1");
    const Embedding rho(w.conductor(), emb_k);
    std::cout << rational_to_string(
                     evaluate_class_at(w, rho, UnityPoint(point[0], point[1]), budget))
              << "\n";
    return 0;
  }
  if (cmd_embeddings->parsed()) {
    Json arr = Json::array();
    for (const Embedding& rho : embeddings_G0(emb_m)) arr.push_back(rho.k);
    print_json(arr);
    return 0;
  }
  if (cmd_gen->parsed()) {
    if (kind == "metabolic") {
      print_json(to_json(WittElement([&] {
        WittElement w(gen_m, 1);
        w.add(make_metabolic(gen_n, gen_m, gen_seed), Rational(1));
        return w;
      }())));
      return 0;
    }
    if (kind == "canonical") {
      std::vector<CanonicalBlock> blocks;
      for (const std::string& b : gen_blocks) {
        const size_t colon = b.find(':');
        const size_t equals = b.find('=');
        if (colon == std::string::npos || equals == std::string::npos || equals < colon)
          throw ValidationError("--block must look like d:j=r");
        const long d = std::stol(b.substr(0, colon));
        const long j = std::stol(b.substr(colon + 1, equals - colon - 1));
        const Rational r = parse_rational(b.substr(equals + 1));
        blocks.push_back(CanonicalBlock{UnityPoint(d, j), r});
      }
      print_json(to_json(make_canonical(parse_rational(gen_r0), blocks)));
      return 0;
    }
    if (kind == "constant") {
      if (gen_diag.empty()) throw ValidationError("gen constant requires --diag");
      std::vector<CyclotomicNumber> entries;
      std::string cur;
      std::istringstream is(gen_diag);
      while (std::getline(is, cur, ','))
        entries.push_back(DiagParser(cur, gen_m).parse());
      MatC a = MatC::Zero(static_cast<Eigen::Index>(entries.size()),
                          static_cast<Eigen::Index>(entries.size()));
      for (size_t i = 0; i < entries.size(); ++i) {
        if (!is_conjugation_fixed(entries[i]))
          throw ValidationError("diagonal entry " + std::to_string(i + 1) +
                                " is not conjugation-fixed");
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
      }
      WittElement w(gen_m, 1);
      w.add(HermitianForm::constant(gen_m, 1, a), Rational(1));
      print_json(to_json(w));
      return 0;
    }
    throw ValidationError("gen kind must be metabolic, canonical, or constant");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SingularFormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedPolynomialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
