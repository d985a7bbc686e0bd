#include "knot/json_io.hpp"

#include <array>
#include <sstream>

#include "json.hpp"
#include "knot/groupzoo.hpp"

namespace knot {

using nlohmann::ordered_json;

namespace {

PermGroup group_from_json(const ordered_json& j, std::uint64_t cap,
                          std::string& echo) {
  if (j.contains("construction")) {
    std::string name = j.at("construction").get<std::string>();
    long long p = j.value("p", 3ll);
    long long n = j.value("n", 1ll);
    std::ostringstream os;
    os << "{\"construction\":\"" << name << "\",\"p\":" << p;
    if (name == "Pn" || name == "P'n" || name == "En" || name == "Hn") {
      os << ",\"n\":" << n << "}";
      echo = os.str();
      if (name == "Pn") return build_P(n, p);
      if (name == "P'n") return build_Pprime(n, p);
      if (name == "En") return build_E(n, p);
      return build_H(n, p);
    }
    if (name == "semidirect-std" || name == "heisenberg-cover") {
      std::vector<MatGL2> mats;
      os << ",\"mats\":[";
      bool first = true;
      if (j.contains("mats"))
        for (const auto& m : j.at("mats")) {
          long long a = m.at(0).at(0).get<long long>();
          long long b = m.at(0).at(1).get<long long>();
          long long c = m.at(1).at(0).get<long long>();
          long long d = m.at(1).at(1).get<long long>();
          MatGL2 mm = MatGL2::make(a, b, c, d, p);
          if (!first) os << ",";
          first = false;
          os << "[[" << mm.a << "," << mm.b << "],[" << mm.c << "," << mm.d
             << "]]";
          mats.push_back(mm);
        }
      os << "]}";
      echo = os.str();
      if (name == "semidirect-std")
        return build_semidirect_std(p, std::move(mats), cap).group;
      return build_heisenberg_cover(p, std::move(mats), cap).total;
    }
    throw UnknownConstruction("unknown construction: " + name);
  }
  if (!j.contains("degree") || !j.contains("generators"))
    throw ParseError("group literal needs degree and generators");
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& arr : j.at("generators")) {
    std::vector<int> im;
    for (const auto& v : arr) im.push_back(v.get<int>());
    if (static_cast<int>(im.size()) != degree)
      throw ParseError("generator image array has wrong length");
    gens.push_back(Perm(std::move(im)));
  }
  PermGroup g = PermGroup::close(std::move(gens), degree, cap);
  ordered_json echo_j;
  echo_j["degree"] = degree;
  echo_j["generators"] = j.at("generators");
  echo = echo_j.dump();
  return g;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text, std::uint64_t cap) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  GroupSpec out;
  out.group = group_from_json(j, cap, out.source);
  return out;
}

InputDoc parse_input_doc(const std::string& json_text, std::uint64_t cap) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("group")) throw ParseError("missing \"group\"");
  InputDoc doc;
  std::string echo;
  doc.group.group = group_from_json(j.at("group"), cap, echo);
  doc.group.source = echo;
  doc.stabilizer_point = j.value("stabilizer_point", 0);
  if (j.contains("decomposition_groups")) {
    for (const auto& gens : j.at("decomposition_groups")) {
      std::vector<Perm> list;
      for (const auto& arr : gens) {
        std::vector<int> im;
        for (const auto& v : arr) im.push_back(v.get<int>());
        if (static_cast<int>(im.size()) != doc.group.group.degree())
          throw ParseError("decomposition generator has wrong degree");
        list.push_back(Perm(std::move(im)));
      }
      doc.decomposition_generators.push_back(std::move(list));
    }
  }
  if (j.contains("methods")) {
    for (const auto& m : j.at("methods")) {
      std::string s = m.get<std::string>();
      if (s == "classifier")
        doc.methods.push_back(Method::Classifier);
      else if (s == "cohomology")
        doc.methods.push_back(Method::Cohomology);
      else
        throw ParseError("unknown method: " + s);
    }
  }
  std::ostringstream canon;
  canon << "{\"group\":" << echo
        << ",\"stabilizer_point\":" << doc.stabilizer_point
        << ",\"decomposition_groups\":[";
  for (std::size_t d = 0; d < doc.decomposition_generators.size(); ++d) {
    if (d) canon << ",";
    canon << "[";
    for (std::size_t i = 0; i < doc.decomposition_generators[d].size(); ++i) {
      if (i) canon << ",";
      canon << "[";
      const auto& im = doc.decomposition_generators[d][i].images();
      for (std::size_t t = 0; t < im.size(); ++t) {
        if (t) canon << ",";
        canon << im[t];
      }
      canon << "]";
    }
    canon << "]";
  }
  canon << "]}";
  doc.canonical = canon.str();
  return doc;
}

std::string group_literal_json(const PermGroup& g) {
  ordered_json j;
  j["degree"] = g.degree();
  ordered_json gens = ordered_json::array();
  for (const Perm& s : g.generators()) gens.push_back(s.images());
  j["generators"] = gens;
  return j.dump();
}

std::uint64_t stable_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  // keep every serialized integer below 2^53
  return h & ((1ull << 53) - 1);
}

namespace {

const char* decision_name(Decision d) {
  return d == Decision::Trivial ? "trivial" : "Z/p";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Classifier: return "classifier";
    case Method::Cohomology: return "cohomology";
    default: return "both";
  }
}

}  // namespace

std::string report_json(const KnotReport& rep, const std::string& input_echo) {
  ordered_json j;
  j["input_hash"] = stable_hash(input_echo);
  j["degree"] = rep.degree;
  j["p"] = rep.p;
  j["group_order"] = rep.group_order;
  j["method"] = method_name(rep.method);
  j["decision"] = decision_name(rep.decision);
  if (rep.sha_invariants) {
    j["sha_invariants"] = rep.sha_invariants->factors;
  }
  if (rep.weak_approximation_defect) {
    j["weak_approximation_defect"] = rep.weak_approximation_defect->factors;
  }
  if (rep.star) {
    ordered_json w;
    ordered_json basis = ordered_json::array();
    for (const Perm& b : rep.star->basis) basis.push_back(b.images());
    w["translation_order"] = rep.star->translation_subgroup.order();
    w["basis"] = basis;
    ordered_json mats = ordered_json::array();
    for (const auto& m : rep.star->matrices)
      mats.push_back({{m[0], m[1]}, {m[2], m[3]}});
    w["matrices"] = mats;
    w["determinants"] = rep.star->determinants;
    j["star"] = w;
  } else {
    j["star"] = nullptr;
  }
  ordered_json dd;
  dd["input_count"] = rep.decomposition_input;
  dd["closed_count"] = rep.decomposition_closed;
  dd["contains_cp2"] = rep.decomposition_has_cp2;
  j["decomposition"] = dd;
  return j.dump(2);
}

std::string zoo_json(const std::string& name, const PermGroup& g) {
  ordered_json j;
  j["name"] = name;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["transitive"] = is_transitive(g);
  j["exponent"] = exponent(g);
  j["center_order"] = center(g).order();
  ordered_json gens = ordered_json::array();
  for (const Perm& s : g.generators()) gens.push_back(s.images());
  j["generators"] = gens;
  return j.dump(2);
}

std::vector<std::array<long long, 4>> parse_mats_arg(const std::string& text) {
  std::vector<std::array<long long, 4>> out;
  if (text.empty()) return out;
  ordered_json j;
  try {
    j = ordered_json::parse("[" + text + "]");
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid --mats: ") + e.what());
  }
  for (const auto& m : j) {
    out.push_back({m.at(0).at(0).get<long long>(),
                   m.at(0).at(1).get<long long>(),
                   m.at(1).at(0).get<long long>(),
                   m.at(1).at(1).get<long long>()});
  }
  return out;
}

}  // namespace knot
