#include "wittsig/io.hpp"

#include <fstream>
#include <sstream>

#include "wittsig/errors.hpp"

namespace wittsig {

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

}  // namespace

Json to_json(const Rational& x) { return rational_to_string(x); }

Rational rational_from_json(const Json& j) {
  expect(j.is_string(), "expected a rational string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const Rational& c : x.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"m", x.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  expect(j.is_object() && j.contains("m") && j.contains("coeffs"),
         "cyclotomic number must be {m, coeffs}");
  const long m = j.at("m").get<long>();
  expect(m >= 1, "conductor must be >= 1");
  const Json& arr = j.at("coeffs");
  expect(arr.is_array(), "coeffs must be an array");
  expect(static_cast<long>(arr.size()) == conductor_data(m).phi,
         "coeffs must have exactly phi(m) entries");
  std::vector<Rational> c;
  c.reserve(arr.size());
  for (const Json& e : arr) c.push_back(rational_from_json(e));
  return CyclotomicNumber(m, std::move(c));
}

namespace {

// Term coefficients are stored as bare coefficient arrays at the poly's
// conductor.
Json coeff_array(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const Rational& c : x.coeffs()) coeffs.push_back(rational_to_string(c));
  return coeffs;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json terms = Json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = coeff_array(c);
  return Json{{"m", p.conductor()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  expect(j.is_object() && j.contains("m") && j.contains("terms"),
         "Laurent polynomial must be {m, terms}");
  const long m = j.at("m").get<long>();
  expect(m >= 1, "conductor must be >= 1");
  const long phi = conductor_data(m).phi;
  LaurentPoly p(m);
  for (const auto& [key, val] : j.at("terms").items()) {
    long e = 0;
    try {
      size_t pos = 0;
      e = std::stol(key, &pos);
      expect(pos == key.size(), "bad exponent");
    } catch (const std::exception&) {
      throw ValidationError("bad exponent key '" + key + "' in Laurent polynomial");
    }
    expect(val.is_array() && static_cast<long>(val.size()) == phi,
           "term coefficients must be arrays of phi(m) rationals");
    std::vector<Rational> c;
    c.reserve(val.size());
    for (const Json& q : val) c.push_back(rational_from_json(q));
    p.set_term(e, CyclotomicNumber(m, std::move(c)));
  }
  return p;
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfunc_from_json(const Json& j) {
  expect(j.is_object() && j.contains("num") && j.contains("den"),
         "rational function must be {num, den}");
  return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

namespace {

Json gram_to_json(const MatR& g) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index jx = 0; jx < g.cols(); ++jx) row.push_back(to_json(g(i, jx)));
    rows.push_back(row);
  }
  return rows;
}

MatR gram_from_json(const Json& j, long ambient_m) {
  expect(j.is_array() && !j.empty(), "gram must be a nonempty array of rows");
  const Eigen::Index n = static_cast<Eigen::Index>(j.size());
  MatR g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    expect(row.is_array() && static_cast<Eigen::Index>(row.size()) == n, "gram must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      RationalFunction e = ratfunc_from_json(row.at(static_cast<size_t>(c)));
      std::ostringstream os;
      os << "gram entry (" << (i + 1) << "," << (c + 1) << ")";
      expect(ambient_m % e.conductor() == 0, os.str() + ": conductor does not divide m");
      g(i, c) = std::move(e);
    }
  }
  return g;
}

}  // namespace

Json to_json(const HermitianForm& f) {
  return Json{{"m", f.conductor()}, {"epsilon", f.epsilon()}, {"gram", gram_to_json(f.gram())}};
}

HermitianForm form_from_json(const Json& j) {
  expect(j.is_object() && j.contains("m") && j.contains("epsilon") && j.contains("gram"),
         "form must be {m, epsilon, gram}");
  const long m = j.at("m").get<long>();
  const int eps = j.at("epsilon").get<int>();
  expect(eps == 1 || eps == -1, "epsilon must be +1 or -1");
  return HermitianForm(m, eps, gram_from_json(j.at("gram"), m));
}

Json to_json(const WittElement& w) {
  Json summands = Json::array();
  for (const WittSummand& s : w.summands())
    summands.push_back(Json{{"coeff", rational_to_string(s.coeff)},
                            {"gram", gram_to_json(s.form.gram())},
                            {"m", s.form.conductor()}});
  return Json{{"m", w.conductor()}, {"epsilon", w.epsilon()}, {"summands", summands}};
}

WittElement witt_from_json(const Json& j) {
  expect(j.is_object() && j.contains("m") && j.contains("epsilon") && j.contains("summands"),
         "form file must be {m, epsilon, summands}");
  const long m = j.at("m").get<long>();
  expect(m >= 1, "conductor must be >= 1");
  const int eps = j.at("epsilon").get<int>();
  expect(eps == 1 || eps == -1, "epsilon must be +1 or -1");
  const Json& arr = j.at("summands");
  expect(arr.is_array(), "summands must be an array");
  WittElement w(m, eps);
  size_t idx = 0;
  for (const Json& sj : arr) {
    expect(sj.is_object() && sj.contains("coeff") && sj.contains("gram"),
           "summand " + std::to_string(idx) + " must be {coeff, gram}");
    const Rational coeff = rational_from_json(sj.at("coeff"));
    long mf = m;
    if (sj.contains("m")) {
      mf = sj.at("m").get<long>();
      expect(m % mf == 0,
             "summand " + std::to_string(idx) + ": conductor does not divide the file conductor");
    }
    HermitianForm f(mf, eps, gram_from_json(sj.at("gram"), mf));
    ValidationReport rep = validate(f);
    if (!rep.ok)
      throw ValidationError("summand " + std::to_string(idx) + ": " + rep.message);
    w.add(std::move(f), coeff);
    ++idx;
  }
  return w;
}

Json to_json(const IsometryTriple& t) {
  Json theta = Json::array(), fm = Json::array();
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    Json r1 = Json::array(), r2 = Json::array();
    for (Eigen::Index j = 0; j < t.dim(); ++j) {
      r1.push_back(to_json(t.theta()(i, j)));
      r2.push_back(to_json(t.f()(i, j)));
    }
    theta.push_back(r1);
    fm.push_back(r2);
  }
  return Json{{"m", t.conductor()}, {"epsilon", t.epsilon()}, {"theta", theta}, {"f", fm}};
}

IsometryTriple triple_from_json(const Json& j) {
  expect(j.is_object() && j.contains("m") && j.contains("epsilon") && j.contains("theta") &&
             j.contains("f"),
         "triple must be {m, epsilon, theta, f}");
  const long m = j.at("m").get<long>();
  const int eps = j.at("epsilon").get<int>();
  auto mat = [m](const Json& rows) {
    expect(rows.is_array() && !rows.empty(), "matrix must be a nonempty array");
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    MatC a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Json& row = rows.at(static_cast<size_t>(i));
      expect(row.is_array() && static_cast<Eigen::Index>(row.size()) == n, "matrix must be square");
      for (Eigen::Index c = 0; c < n; ++c) {
        CyclotomicNumber v = cyclotomic_from_json(row.at(static_cast<size_t>(c)));
        expect(m % v.conductor() == 0, "entry conductor does not divide m");
        a(i, c) = lift_to_compositum(v, m);
      }
    }
    return a;
  };
  return IsometryTriple(m, eps, mat(j.at("theta")), mat(j.at("f")));
}

Json to_json(const CirclePoint& c) {
  if (c.is_exact()) return Json{{"type", "exact"}, {"N", c.point.N}, {"j", c.point.j}};
  return Json{{"type", "isolated"},
              {"angle_lo", rational_to_string(c.angle.lo)},
              {"angle_hi", rational_to_string(c.angle.hi)},
              {"source", c.source}};
}

Json to_json(const SignatureStepFunction& s) {
  Json candidates = Json::array(), values = Json::array(), jmp = Json::array(),
       samples = Json::array();
  for (const CirclePoint& c : s.candidates) candidates.push_back(to_json(c));
  for (const Rational& v : s.arc_values) values.push_back(rational_to_string(v));
  for (const Rational& v : s.jumps) jmp.push_back(rational_to_string(v));
  for (const UnityPoint& p : s.arc_samples) samples.push_back(Json{{"N", p.N}, {"j", p.j}});
  return Json{{"embedding_k", s.rho.k}, {"m", s.rho.m},       {"candidates", candidates},
              {"arc_values", values},   {"jumps", jmp},       {"arc_samples", samples}};
}

Json to_json(const Decision& d) {
  Json witnesses = Json::array();
  for (const Witness& w : d.witnesses)
    witnesses.push_back(Json{{"embedding_k", w.rho.k},
                             {"sample", Json{{"N", w.sample.N}, {"j", w.sample.j}}},
                             {"value", rational_to_string(w.value)}});
  Json sf = Json::object();
  for (const auto& [k, s] : d.step_functions) sf[std::to_string(k)] = to_json(s);
  return Json{{"trivial", d.trivial}, {"witnesses", witnesses}, {"step_functions", sf}};
}

std::string step_function_csv(const SignatureStepFunction& s) {
  std::ostringstream os;
  os << "angle_turns_lo,angle_turns_hi,value\n";
  auto boundary = [](const CirclePoint& c) {
    if (c.is_exact()) return c.point.angle_turns();
    return mod_one((c.angle.lo + c.angle.hi) / 2);
  };
  if (s.candidates.empty()) {
    os << "0,1," << rational_to_string(s.arc_values.at(0)) << "\n";
    return os.str();
  }
  const size_t K = s.candidates.size();
  for (size_t i = 0; i < K; ++i) {
    const Rational lo = boundary(s.candidates[i]);
    Rational hi = boundary(s.candidates[(i + 1) % K]);
    if (i + 1 == K) hi += 1;
    os << rational_to_string(lo) << "," << rational_to_string(hi) << ","
       << rational_to_string(s.arc_values[i]) << "\n";
  }
  return os.str();
}

WittElement parse_form_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
  return witt_from_json(j);
}

WittElement load_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_form_file(buf.str());
}

}  // namespace wittsig
