// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <unistd.h>

#include "parser_cases.hpp"
#include "primesrc/catalog.hpp"
#include "primesrc/elements.hpp"
#include "primesrc/hom.hpp"
#include "primesrc/ideals.hpp"
#include "primesrc/primeness.hpp"
#include "primesrc/theorems.hpp"

using namespace primesrc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<FiniteRing> battery_rings() {
  std::vector<FiniteRing> out;
  for (const auto& src : default_battery().rings) out.push_back(ring_from_text(std::get<std::string>(src)));
  return out;
}

std::string fmt(const FiniteRing& r, const Subset& s) { return format_subset(r, s); }

Outcome ac1() {
  Outcome o;
  std::size_t cells = 0;
  const auto policy = default_battery().subset_policy;
  for (const auto& r : battery_rings()) {
    for (const auto& a : select_subsets(r, policy)) {
      ++cells;
      o.check(primeness_source(r, a) == primeness_source_direct(r, a),
              r.descriptor() + " A=" + fmt(r, a));
    }
  }
  if (o.ok) o.detail = std::to_string(cells) + " (ring, A) cells";
  return o;
}

Outcome ac2() {
  Outcome o;
  auto r = make_subring_kzn(2, 16);
  o.check(fmt(r, primeness_source(r, Subset::whole(r))) == "{0,4,8,12}", "P_2Z(16)");
  auto z6 = make_zn(6);
  o.check(fmt(z6, s_set(z6, 2, Subset::whole(z6))) == "{0,3}", "S^2 Z(6)");
  o.check(fmt(z6, s_set(z6, 3, Subset::whole(z6))) == "{0,2,4}", "S^3 Z(6)");
  for (std::uint64_t n = 1; n <= 24; ++n) {
    auto z = make_zn(n);
    o.check(primeness_source(z, Subset::whole(z)) == Subset::zero(z), "P_Z(" + std::to_string(n) + ")");
  }
  for (std::uint64_t n = 1; n <= 8; ++n) {
    auto z = make_zero_mult_ring(n);
    o.check(primeness_source(z, Subset::whole(z)).is_whole(), "P_N(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  std::map<TheoremId, std::size_t> non_skip;
  std::size_t pass = 0, skip = 0, fail = 0;
  for (const auto& rep : run_battery(default_battery())) {
    o.check(!rep.error, rep.ring + ": " + rep.error.value_or(""));
    for (const auto& e : rep.entries) {
      switch (e.status()) {
        case Status::pass: ++pass; break;
        case Status::skip: ++skip; break;
        case Status::fail: ++fail; break;
      }
      o.check(e.status() != Status::fail, rep.ring + " " + std::string(to_string(e.theorem)) + " " + e.context);
      if (e.status() != Status::skip) ++non_skip[e.theorem];
    }
  }
  for (TheoremId id : kAllTheorems) {
    o.check(non_skip[id] > 0, "no non-skip entry for " + std::string(to_string(id)));
  }
  if (o.ok) {
    o.detail = "pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
               " skip=" + std::to_string(skip) + ", all 11 theorem ids exercised";
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  auto r = make_subring_kzn(2, 16);
  auto e = verify_product_theorem(r, r, Subset::whole(r), Subset::whole(r));
  o.check(e.status() == Status::pass, "entry did not pass: " + e.notes);
  o.check(e.notes.find("|P(AxB)|=16, |P(A)xP(B)|=16") != std::string::npos, e.notes);
  // Independent count through the product ring itself.
  auto rr = make_product(r, r);
  o.check(primeness_source(rr, Subset::whole(rr)).size() == 16, "|P(2Z16 x 2Z16)|");
  if (o.ok) o.detail = e.notes;
  return o;
}

Outcome ac5() {
  Outcome o;
  o.check(is_prime_ring(make_matrix_ring(2, make_zn(2))).holds, "M(2,Z(2)) prime");
  for (std::uint64_t p : {2, 3, 5, 7}) {
    o.check(is_prime_ring(make_zn(p)).holds, "Z(" + std::to_string(p) + ") prime");
  }
  auto z6 = make_zn(6);
  auto c = is_prime_ring(z6);
  o.check(!c.holds, "Z(6) reported prime");
  o.check(c.witness == std::make_optional(std::make_pair(Element{2}, Element{3})), "Z(6) witness");
  o.check(primeness_source(z6, Subset::whole(z6)) == Subset::zero(z6), "P_Z(6) = {0}");
  auto e = verify_prime_implies_trivial(z6);
  o.check(e.notes.find("converse does not hold") != std::string::npos, "converse note: " + e.notes);
  return o;
}

Outcome ac6() {
  Outcome o;
  auto z6 = make_zn(6);
  o.check(enumerate_ideals(z6).size() == 4, "ideal count of Z(6)");
  auto primes = enumerate_prime_ideals(z6);
  const std::vector<Subset> want{ideal_generated_by(z6, Subset::of(z6, {3})),
                                 ideal_generated_by(z6, Subset::of(z6, {2}))};
  o.check(primes == want, "prime ideals of Z(6)");
  o.check(prime_radical(z6) == Subset::zero(z6), "radical Z(6)");
  auto z4 = make_zn(4);
  o.check(prime_radical(z4) == Subset::of(z4, {0, 2}), "radical Z(4)");
  auto n4 = make_zero_mult_ring(4);
  o.check(prime_radical(n4).is_whole(), "radical N(4)");
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& r : battery_rings()) {
    for (Element x : primeness_source(r, Subset::whole(r)).members()) {
      if (x == r.zero()) continue;
      ++checked;
      const std::string who = r.descriptor() + " x=" + r.label(x);
      o.check(power(r, x, 3) == r.zero(), who + " cube");
      o.check(r.mul(x, x) != x, who + " idempotent");
      const auto p = classify_element(r, x);
      o.check(p.left_zero_divisor && p.right_zero_divisor, who + " zero divisor");
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " nonzero members checked";
  return o;
}

Outcome ac8() {
  Outcome o;
  auto z4 = make_zn(4);
  auto inc = make_hom(make_subring_kzn(2, 4), z4, {0, 2});
  auto img = image_subring(inc);
  auto fp = push_forward(inc, primeness_source(inc.source, Subset::whole(inc.source)));
  Subset p_img = Subset::empty(z4);
  for (Element x : primeness_source(img.ring.ring, Subset::whole(img.ring.ring)).members()) {
    p_img.insert(img.ring.embedding[x]);
  }
  o.check(fmt(z4, fp) == "{0,2}", "f(P_R) = " + fmt(z4, fp));
  o.check(fmt(z4, p_img) == "{0,2}", "P_f(R) = " + fmt(z4, p_img));
  o.check(verify_hom_pushforward(inc).status() == Status::pass, "inclusion entry");

  auto red = reduction_hom(4, 2);
  auto rfp = push_forward(red, primeness_source(red.source, Subset::whole(red.source)));
  auto rimg = image_subring(red);
  o.check(fmt(red.target, rfp) == "{0}", "reduction f(P_R)");
  o.check(primeness_source(rimg.ring.ring, Subset::whole(rimg.ring.ring)).size() == 1,
          "reduction P_f(R)");
  o.check(verify_hom_pushforward(red).status() == Status::pass, "reduction entry");
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const auto& c : parser_cases::golden()) {
    try {
      o.check(render(*parse_ring_expr(c.input)) == c.canonical, "golden " + c.input);
    } catch (const Error& e) {
      o.check(false, "golden " + c.input + ": " + e.what());
    }
  }
  for (const auto& c : parser_cases::failures()) {
    try {
      parse_ring_expr(c.input);
      o.check(false, "no error for '" + c.input + "'");
    } catch (const ParseError& e) {
      o.check(e.offset() == c.offset && e.message().find(c.message) != std::string::npos,
              "error case '" + c.input + "': offset " + std::to_string(e.offset()) + " " + e.message());
    }
  }
  std::mt19937_64 rng(20261016);
  const int trials = 1000;
  for (int i = 0; i < trials && o.ok; ++i) {
    const auto ast = parser_cases::random_expr(rng, 3);
    const auto text = render(*ast);
    try {
      o.check(*parse_ring_expr(text) == *ast, "round trip " + text);
    } catch (const Error& e) {
      o.check(false, "round trip " + text + ": " + e.what());
    }
  }
  if (o.ok) {
    o.detail = std::to_string(parser_cases::golden().size()) + " golden, " +
               std::to_string(parser_cases::failures().size()) + " error cases, " +
               std::to_string(trials) + " round trips";
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac10() {
  Outcome o;
  namespace fs = std::filesystem;
  const auto base = fs::temp_directory_path() / ("primesrc_acceptance_" + std::to_string(::getpid()));
  const auto p1 = base.string() + "_a.jsonl", p2 = base.string() + "_b.jsonl";
  o.check(build_catalog(6, p1, false) == 21, "entry count");
  o.check(build_catalog(6, p2, false) == 21, "entry count (second run)");
  const auto a = slurp(p1);
  o.check(a == slurp(p2), "regeneration differs");
  std::istringstream lines(a);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    ++n;
    const auto j = Json::parse(line);
    const auto p = j["p_source"].get<std::vector<std::string>>();
    const auto s = j["semi_source"].get<std::vector<std::string>>();
    const std::string d = j["descriptor"];
    for (const auto& x : p) o.check(std::find(s.begin(), s.end(), x) != s.end(), d + " P within S");
    o.check(!p.empty() && p.front() == "0", d + " P contains 0");
    if (j["is_prime"] == true || j["has_identity"] == true) {
      o.check(p == std::vector<std::string>{"0"}, d + " prime or unital ring has P nontrivial");
    }
    if (j["is_prime"] == true) o.check(j["is_semiprime"] == true, d + " prime but not semiprime");
    o.check(j["commutative"] == true, d + " commutative");
    const auto rad = j["radical"].get<std::vector<std::string>>();
    for (const auto& x : p) o.check(std::find(rad.begin(), rad.end(), x) != rad.end(), d + " P within radical");
    if (j["prime_ideal_count"] == 0) o.check(rad.size() == j["order"].get<std::size_t>(), d + " radical");
  }
  o.check(n == 21, "line count " + std::to_string(n));
  fs::remove(p1);
  fs::remove(p2);
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "two routes to P_R(A) agree on the default battery", 30, ac1},
      {"AC2", "fixed-point values", 0, ac2},
      {"AC3", "theorem battery: zero failures, every theorem exercised", 60, ac3},
      {"AC4", "product theorem on 2Z(16) x 2Z(16)", 0, ac4},
      {"AC5", "prime ring classification and the Z(6) control", 0, ac5},
      {"AC6", "ideals, prime ideals, prime radical", 0, ac6},
      {"AC7", "element corollaries on every battery ring", 0, ac7},
      {"AC8", "homomorphism push-forward", 0, ac8},
      {"AC9", "parser golden cases, error offsets, round trips", 0, ac9},
      {"AC10", "cyclic-ring catalog", 10, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.check(false, "took " + std::to_string(secs) + " s");
    }
    if (!o.ok) ++failed;
    std::printf("%-4s %s  %s (%.3f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
