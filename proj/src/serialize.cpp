#include "primesrc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace primesrc {

Json subset_to_json(const FiniteRing& r, const Subset& s) {
  Json out = Json::array();
  for (Element x : s.members()) out.push_back(r.label(x));
  return out;
}

Json source_to_json(const FiniteRing& r, const SourceResult& result) {
  Json j;
  j["kind"] = std::string(to_string(result.kind));
  j["a"] = result.parameter_a ? Json(r.label(*result.parameter_a)) : Json(nullptr);
  j["A"] = subset_to_json(r, result.subset_a);
  j["members"] = subset_to_json(r, result.members);
  return j;
}

Json profile_to_json(const FiniteRing& r, const ElementProfile& p) {
  Json j;
  j["element"] = r.label(p.element);
  j["idempotent"] = p.idempotent;
  j["nilpotency_index"] = p.nilpotency_index ? Json(*p.nilpotency_index) : Json(nullptr);
  j["left_zero_divisor"] = p.left_zero_divisor;
  j["right_zero_divisor"] = p.right_zero_divisor;
  j["unit"] = p.unit;
  j["central"] = p.central;
  return j;
}

Json entry_to_json(const Entry& e) {
  Json j;
  j["theorem"] = std::string(to_string(e.theorem));
  j["context"] = e.context;
  j["status"] = std::string(to_string(e.status()));
  j["hypotheses_satisfied"] = e.hypotheses_satisfied;
  j["conclusion_holds"] = e.conclusion_holds;
  j["witnesses"] = e.witnesses;
  j["notes"] = e.notes;
  return j;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["ring"] = report.ring;
  if (report.error) j["error"] = *report.error;
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(entry_to_json(e));
  j["entries"] = std::move(entries);
  const Summary s = report.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}, {"total", s.total()}};
  return j;
}

Json ring_to_json(const FiniteRing& r) {
  const std::size_t n = r.order();
  Json add = Json::array(), mul = Json::array();
  for (Element x = 0; x < n; ++x) {
    Json add_row = Json::array(), mul_row = Json::array();
    for (Element y = 0; y < n; ++y) {
      add_row.push_back(r.add(x, y));
      mul_row.push_back(r.mul(x, y));
    }
    add.push_back(std::move(add_row));
    mul.push_back(std::move(mul_row));
  }
  Json j;
  j["order"] = n;
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  j["labels"] = r.labels();
  if (r.one()) j["one"] = *r.one();
  return j;
}

CustomRingSpec custom_spec_from_json(const Json& j) {
  try {
    CustomRingSpec spec;
    if (!j.is_object()) throw Error("ring file must be a JSON object");
    spec.order = j.at("order").get<std::size_t>();
    spec.add = j.at("add").get<std::vector<std::vector<Element>>>();
    spec.mul = j.at("mul").get<std::vector<std::vector<Element>>>();
    if (j.contains("labels")) spec.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("one") && !j.at("one").is_null()) spec.one = j.at("one").get<Element>();
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedTable(std::string("bad ring file: ") + e.what());
  }
}

FiniteRing ring_from_json(const Json& j, const Limits& limits) {
  auto spec = custom_spec_from_json(j);
  return make_custom(spec.order, std::move(spec.add), std::move(spec.mul),
                     std::move(spec.labels), spec.one, limits);
}

namespace {

SubsetPolicy policy_from_json(const Json& j) {
  SubsetPolicy p;
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "default") return p;
    if (name == "whole") {
      p.principal_ideals = p.singletons = p.generated_subrings = false;
      return p;
    }
    if (name == "ideals") {
      p.singletons = p.generated_subrings = false;
      return p;
    }
    throw Error("unknown subset_policy '" + name + "' (expected default, whole or ideals)");
  }
  if (!j.is_object()) throw Error("subset_policy must be a string or an object");
  p.whole = j.value("whole", p.whole);
  p.principal_ideals = j.value("principal_ideals", p.principal_ideals);
  p.singletons = j.value("singletons", p.singletons);
  p.generated_subrings = j.value("generated_subrings", p.generated_subrings);
  p.max_subsets = j.value("max_subsets", p.max_subsets);
  return p;
}

HomSpec hom_from_json(const Json& j) {
  HomSpec h;
  h.kind = j.at("kind").get<std::string>();
  h.ring = j.value("ring", std::string{});
  h.subset = j.value("subset", std::string{});
  h.other = j.value("other", std::string{});
  h.n = j.value("n", std::uint64_t{0});
  h.m = j.value("m", std::uint64_t{0});
  h.factor = j.value("factor", 0);
  return h;
}

}  // namespace

BatteryConfig battery_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error("battery config must be a JSON object");
    BatteryConfig c;
    if (j.contains("rings")) {
      for (const auto& r : j.at("rings")) {
        if (r.is_string()) {
          c.rings.emplace_back(r.get<std::string>());
        } else {
          c.rings.emplace_back(custom_spec_from_json(r));
        }
      }
    }
    if (j.contains("subset_policy")) c.subset_policy = policy_from_json(j.at("subset_policy"));
    if (j.contains("homs")) {
      for (const auto& h : j.at("homs")) c.homs.push_back(hom_from_json(h));
    }
    if (j.contains("products")) {
      for (const auto& p : j.at("products")) {
        if (!p.is_array() || p.size() != 2) throw Error("each product must be [EXPR, EXPR]");
        c.products.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
      }
    }
    if (j.contains("theorems")) {
      for (const auto& t : j.at("theorems")) {
        const auto name = t.get<std::string>();
        auto id = theorem_from_string(name);
        if (!id) throw Error("unknown theorem id '" + name + "'");
        c.theorems.insert(*id);
      }
    }
    c.auto_homs = j.value("auto_homs", c.auto_homs);
    c.auto_products = j.value("auto_products", c.auto_products);
    c.limits.max_order = j.value("max_order", c.limits.max_order);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad battery config: ") + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace primesrc
