#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tgr/catalog.hpp"
#include "tgr/cohomology.hpp"
#include "tgr/equivalence.hpp"
#include "tgr/io.hpp"

using namespace tgr;

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  std::string format = "text";
  unsigned jobs = 1;
  std::string cache_dir;
  bool verify_cache = false;
  std::uint64_t budget = 1u << 24;

  WedderburnOptions wedderburn() const {
    WedderburnOptions o;
    o.seed = seed;
    o.tolerance = tolerance;
    return o;
  }
  ProfileCache cache() const {
    ProfileCache c;
    c.dir = cache_dir.empty() ? ProfileCache::default_dir() : std::filesystem::path(cache_dir);
    c.verify = verify_cache;
    return c;
  }
};

// Every command fills all three renderings; one is printed.
struct Report {
  Json json;
  std::ostringstream text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  void emit(const std::string& format) const {
    if (format == "json") {
      std::cout << json.dump(2) << '\n';
    } else if (format == "csv") {
      auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      };
      auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << quote(row[i]);
        std::cout << '\n';
      };
      line(csv_header);
      for (const auto& r : csv_rows) line(r);
    } else {
      std::cout << text.str();
    }
  }
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep, const char* empty = "") {
  if (v.empty()) return empty;
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string multiplier_name(const std::vector<std::uint64_t>& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " x C" : "C") + std::to_string(m[i]);
  return s;
}

std::vector<std::uint64_t> parse_coords(const std::string& s) {
  std::vector<std::uint64_t> c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad class coordinates '" + s + "'");
    }
  }
  return c;
}

// Profiles for many groups, computed on `jobs` threads, returned in input order.
std::vector<ProfileData> profiles(const std::vector<GroupRef>& groups, const RunConfig& cfg) {
  std::vector<ProfileData> out(groups.size());
  std::vector<std::exception_ptr> errors(groups.size());
  std::atomic<std::size_t> next{0};
  const auto cache = cfg.cache();
  const auto opts = cfg.wedderburn();
  auto worker = [&] {
    for (std::size_t i; (i = next++) < groups.size();) {
      try {
        out[i] = cache.get(groups[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(groups.size())));
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ProfileData profile_of(const std::string& ref, const RunConfig& cfg) {
  return cfg.cache().get(resolve_group(ref), cfg.wedderburn());
}

std::vector<GroupRef> load_groups(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ":0:0: cannot open file");
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    break;
  }
  return word == "group" ? resolve_group_file(path) : resolve_group_list(path);
}

std::vector<std::string> family_for_order(std::uint64_t n) {
  switch (n) {
    case 16: return catalog_family("order16");
    case 81: return catalog_family("p4@3");
    case 625: return catalog_family("p4@5");
    case 3249: return catalog_family("ex4.5");
    case 44100: return catalog_family("ex5.7");
  }
  throw Error(ErrorKind::UnknownId, "no catalog family of order " + std::to_string(n));
}

// ---- per-group commands ----

Report cmd_show(const std::string& ref) {
  Report r;
  auto g = resolve_group(ref);
  r.json["name"] = g.name;
  r.json["order"] = g.order();
  r.csv_header = {"name", "order", "abelian", "center", "derived", "exponent", "classes"};
  if (g.table) {
    const auto& G = *g.table;
    const auto& S = G.structure();
    r.json["abelian"] = G.is_abelian();
    r.json["center"] = S.center.size();
    r.json["derived"] = S.derived.size();
    r.json["exponent"] = S.exponent;
    r.json["classes"] = S.classes.size();
    if (G.is_abelian()) r.json["invariants"] = abelian_invariants(G);
    r.text << g.name << ": order " << G.order() << (G.is_abelian() ? ", abelian " + multiplier_name(abelian_invariants(G)) : "")
           << "\n  center " << S.center.size() << ", derived " << S.derived.size() << ", exponent " << S.exponent
           << ", " << S.classes.size() << " conjugacy classes\n";
    r.csv_rows.push_back({g.name, std::to_string(G.order()), G.is_abelian() ? "1" : "0", std::to_string(S.center.size()),
                          std::to_string(S.derived.size()), std::to_string(S.exponent), std::to_string(S.classes.size())});
  } else {
    const auto& s = *g.structured;
    r.json["structured"] = {{"m", s.m}, {"rank", s.rank}, {"k", s.k}, {"action", s.action}};
    r.text << g.name << ": order " << s.order() << " = (C" << s.m << ")^" << s.rank << " : (" << multiplier_name(s.k)
           << ")\n";
    for (std::size_t i = 0; i < s.action.size(); ++i) {
      r.text << "  generator " << i << " acts by [";
      for (std::size_t a = 0; a < s.action[i].size(); ++a) r.text << (a ? "; " : "") << join(s.action[i][a], " ");
      r.text << "]\n";
    }
    r.csv_rows.push_back({g.name, std::to_string(s.order()), "", "", "", "", ""});
  }
  return r;
}

Report cmd_multiplier(const std::string& ref, const RunConfig& cfg) {
  Report r;
  auto g = resolve_group(ref);
  std::vector<std::uint64_t> orders;
  std::string method;
  if (g.structured) {
    orders = structured_multiplier(*g.structured).orders;
    method = "structured";
  } else {
    MultiplierOptions mo;
    mo.seed = cfg.seed;
    auto M = multiplier(*g.table, mo);
    orders = M.orders;
    method = M.method;
  }
  r.json = {{"name", g.name}, {"order", g.order()}, {"multiplier", orders}, {"method", method}};
  r.text << "M(" << g.name << ") = " << multiplier_name(orders) << "  [" << method << "]\n";
  r.csv_header = {"name", "order", "multiplier", "method"};
  r.csv_rows.push_back({g.name, std::to_string(g.order()), join(orders, "x", "1"), method});
  return r;
}

Report cmd_degrees(const std::string& ref, const std::string& cls, const RunConfig& cfg) {
  Report r;
  auto p = profile_of(ref, cfg);
  std::vector<std::uint64_t> c(p.multiplier.size(), 0);
  if (!cls.empty()) {
    c = parse_coords(cls);
    if (c.size() != p.multiplier.size())
      throw Error(ErrorKind::ShapeMismatch, "class needs " + std::to_string(p.multiplier.size()) + " coordinates");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] >= p.multiplier[i]) throw Error(ErrorKind::ShapeMismatch, "class coordinate out of range");
  }
  const auto idx = p.index_of(c);
  const auto& w = p.types[idx];
  r.json = {{"name", p.name}, {"class", c}, {"class_order", p.class_order(idx)}, {"type", w.to_string()}, {"parts", to_json(w)}};
  r.text << (cls.empty() ? "C" + p.name : "C^[" + join(c, ",") + "]" + p.name) << " = " << w.to_string() << '\n';
  r.csv_header = {"name", "class", "type"};
  r.csv_rows.push_back({p.name, join(c, " "), w.to_string()});
  return r;
}

Report cmd_profile(const std::string& ref, const RunConfig& cfg) {
  Report r;
  auto p = profile_of(ref, cfg);
  r.json = to_json(p);
  r.text << p.name << ": order " << p.order << ", M = " << multiplier_name(p.multiplier)
         << (p.central_type() ? ", central type" : "") << "\n  CG = " << p.ordinary.to_string() << '\n';
  r.csv_header = {"name", "class", "order", "type"};
  for (std::size_t i = 0; i < p.types.size(); ++i) {
    auto c = p.coords(i);
    r.text << "  [" << join(c, ",") << "] order " << p.class_order(i) << ": " << p.types[i].to_string() << '\n';
    r.csv_rows.push_back({p.name, join(c, " "), std::to_string(p.class_order(i)), p.types[i].to_string()});
  }
  return r;
}

Report cmd_conditions(const std::string& a, const std::string& b, const RunConfig& cfg) {
  Report r;
  auto G = profile_of(a, cfg), H = profile_of(b, cfg);
  auto M = conditions(G, H);
  r.json = to_json(M);
  r.json["first"] = G.name;
  r.json["second"] = H.name;
  r.text << G.name << " vs " << H.name << ": A=" << M.A << " B=" << M.B << " C=" << M.C << " D=" << M.D << '\n';
  for (const auto& e : M.evidence) r.text << "  " << e.condition << (e.holds ? " holds: " : " fails: ") << e.detail << '\n';
  r.csv_header = {"first", "second", "A", "B", "C", "D"};
  r.csv_rows.push_back({G.name, H.name, std::to_string(M.A), std::to_string(M.B), std::to_string(M.C), std::to_string(M.D)});
  return r;
}

std::string psi_text(const std::vector<std::vector<std::uint64_t>>& psi) {
  std::string s;
  for (std::size_t i = 0; i < psi.size(); ++i) s += (i ? " " : "") + std::string("[") + join(psi[i], ",") + "]";
  return s;
}

Report cmd_equiv(const std::string& a, const std::string& b, const RunConfig& cfg) {
  Report r;
  auto G = profile_of(a, cfg), H = profile_of(b, cfg);
  auto R = twisted_equivalent(G, H, EquivOptions{cfg.budget});
  r.json = to_json(R);
  r.json["first"] = G.name;
  r.json["second"] = H.name;
  r.text << G.name << (R.equivalent ? " ~ " : " !~ ") << H.name << ": " << R.reason << '\n';
  if (R.equivalent) r.text << "  psi: " << (R.psi.empty() ? "(trivial multiplier)" : psi_text(R.psi)) << '\n';
  r.csv_header = {"first", "second", "equivalent", "psi", "reason"};
  r.csv_rows.push_back({G.name, H.name, std::to_string(R.equivalent), psi_text(R.psi), R.reason});
  return r;
}

}  // namespace

namespace {

// ---- classification and drivers ----

std::string class_text(const EquivPartition& P, const std::vector<std::size_t>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + P.names[c[i]];
  return s + "}";
}

// Compares non-singleton classes with a fixture; returns whether they match.
bool partition_matches(const EquivPartition& P, const ExpectedPartition& E) {
  std::set<std::set<std::string>> got, want;
  for (const auto& c : P.classes)
    if (c.size() > 1) {
      std::set<std::string> s;
      for (auto i : c) s.insert(P.names[i]);
      got.insert(s);
    }
  for (const auto& c : E.classes) want.insert(std::set<std::string>(c.begin(), c.end()));
  return got == want && P.names.size() == E.members.size();
}

void partition_report(Report& r, const EquivPartition& P) {
  r.json["partition"] = to_json(P);
  std::size_t singletons = 0;
  for (const auto& c : P.classes) singletons += c.size() == 1;
  r.text << P.names.size() << " groups, " << P.classes.size() << " classes (" << singletons << " singletons)\n";
  for (const auto& c : P.classes) r.text << "  " << class_text(P, c) << '\n';
  r.csv_header = {"group", "class"};
  for (std::size_t i = 0; i < P.names.size(); ++i) r.csv_rows.push_back({P.names[i], std::to_string(P.class_of[i])});
}

Report classify_profiles(const std::vector<ProfileData>& ps, const RunConfig& cfg, EquivPartition* out = nullptr) {
  Report r;
  auto P = classify(ps, ClassifyOptions{EquivOptions{cfg.budget}, cfg.jobs});
  std::set<std::string> routes;
  for (const auto& p : ps) routes.insert(p.route.substr(0, p.route.find('/')));
  r.json["routes"] = routes;
  partition_report(r, P);
  if (out) *out = std::move(P);
  return r;
}

std::vector<GroupRef> refs(const std::vector<std::string>& ids) {
  std::vector<GroupRef> out;
  for (const auto& id : ids) out.push_back(resolve_group(id));
  return out;
}

Report cmd_survey(const std::string& file, const RunConfig& cfg) {
  Report r;
  auto groups = load_groups(file);
  auto ps = profiles(groups, cfg);
  auto S = central_type_survey(ps);
  Json members = Json::array(), ab = Json::array(), c = Json::array();
  for (auto i : S.members) members.push_back(ps[i].name);
  for (auto [i, j] : S.pairs_ab) ab.push_back({ps[i].name, ps[j].name});
  for (auto [i, j] : S.pairs_c) c.push_back({ps[i].name, ps[j].name});
  r.json = {{"groups", ps.size()}, {"central_type", S.members.size()}, {"members", members}, {"pairs_AB", ab}, {"pairs_C", c}};
  r.text << ps.size() << " groups, " << S.members.size() << " of central type\n";
  for (auto i : S.members) r.text << "  " << ps[i].name << "  M = " << multiplier_name(ps[i].multiplier) << '\n';
  r.text << S.pairs_ab.size() << " central-type pairs with A and B, " << S.pairs_c.size() << " with C\n";
  for (auto [i, j] : S.pairs_ab) r.text << "  A B: " << ps[i].name << ", " << ps[j].name << '\n';
  for (auto [i, j] : S.pairs_c) r.text << "  C: " << ps[i].name << ", " << ps[j].name << '\n';
  r.csv_header = {"group", "central_type", "multiplier"};
  std::set<std::size_t> ct(S.members.begin(), S.members.end());
  for (std::size_t i = 0; i < ps.size(); ++i)
    r.csv_rows.push_back({ps[i].name, ct.count(i) ? "1" : "0", join(ps[i].multiplier, "x", "1")});
  return r;
}

std::vector<std::string> audit_scan_ids() {
  std::vector<std::string> ids;
  for (const char* fam : {"order16", "p4@3", "ex4.5"})
    for (auto& id : catalog_family(fam)) ids.push_back(id);
  for (auto& id : catalog_family("section3"))
    if (catalog_entry(id).order <= 64) ids.push_back(id);
  return ids;
}

Report cmd_audit(const RunConfig& cfg) {
  Report r;
  const auto patterns = expected_patterns();
  std::vector<std::string> fixture_ids;
  for (const auto& x : patterns) fixture_ids.insert(fixture_ids.end(), {x.first, x.second});
  auto fps = profiles(refs(fixture_ids), cfg);
  std::vector<std::tuple<std::string, ProfileData, ProfileData>> fixtures;
  for (std::size_t i = 0; i < patterns.size(); ++i) fixtures.emplace_back(patterns[i].label, fps[2 * i], fps[2 * i + 1]);
  auto scan = profiles(refs(audit_scan_ids()), cfg);
  auto A = implication_audit(fixtures, scan);
  bool all = true;
  Json rows = Json::array();
  r.csv_header = {"label", "first", "second", "A", "B", "C", "D", "expected"};
  r.text << "condition patterns\n";
  for (std::size_t i = 0; i < A.rows.size(); ++i) {
    const auto& row = A.rows[i];
    const auto& x = patterns[i];
    const bool ok = row.matrix.A == x.A && row.matrix.B == x.B && row.matrix.C == x.C && row.matrix.D == x.D;
    all &= ok;
    auto j = to_json(row.matrix);
    j["label"] = row.label;
    j["first"] = row.first;
    j["second"] = row.second;
    j["as_expected"] = ok;
    rows.push_back(j);
    r.text << "  " << row.first << " / " << row.second << ": " << row.matrix.pattern() << (ok ? "" : "   UNEXPECTED") << '\n';
    r.csv_rows.push_back({row.label, row.first, row.second, std::to_string(row.matrix.A), std::to_string(row.matrix.B),
                          std::to_string(row.matrix.C), std::to_string(row.matrix.D), ok ? "1" : "0"});
  }
  r.text << "D => A and C: " << A.pairs_checked << " same-order pairs, " << A.violations.size() << " violations\n";
  for (auto [i, j] : A.violations) r.text << "  violation: " << scan[i].name << ", " << scan[j].name << '\n';
  r.json = {{"rows", rows}, {"pairs_checked", A.pairs_checked}, {"violations", A.violations.size()}, {"ok", all && A.violations.empty()}};
  if (!all || !A.violations.empty()) {
    r.emit(cfg.format);
    throw Error(ErrorKind::InvariantViolation, "implication audit deviates from the fixtures");
  }
  return r;
}

Report reproduce_partition(const std::string& family, const std::string& fixture, const RunConfig& cfg) {
  EquivPartition P;
  auto r = classify_profiles(profiles(refs(catalog_family(family)), cfg), cfg, &P);
  const bool ok = partition_matches(P, expected_partition(fixture));
  r.json["matches_expected"] = ok;
  r.text << "expected partition " << (ok ? "reproduced" : "DIFFERS") << '\n';
  return r;
}

Report reproduce_ex45(const RunConfig& cfg) {
  const auto ids = catalog_family("ex4.5");
  auto ps = profiles(refs(ids), cfg);
  Report r;
  std::map<std::vector<std::uint64_t>, std::vector<std::string>> t1;
  std::map<WedderburnType, std::vector<std::string>> t2;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    t1[ps[i].multiplier].push_back(ids[i]);
    t2[ps[i].ordinary].push_back(ids[i]);
    auto f = expected(ids[i]);
    cells += (ps[i].multiplier == *f.multiplier) + (ps[i].ordinary == *f.ordinary);
  }
  Json j1 = Json::array(), j2 = Json::array();
  r.text << "Schur multipliers\n";
  for (auto& [m, g] : t1) {
    r.text << "  " << multiplier_name(m) << ": " << std::accumulate(g.begin() + 1, g.end(), g[0], [](std::string a, const std::string& b) { return a + ", " + b; }) << '\n';
    j1.push_back({{"multiplier", m}, {"groups", g}});
  }
  r.text << "complex group algebras\n";
  for (auto& [w, g] : t2) {
    r.text << "  " << w.to_string() << ": " << std::accumulate(g.begin() + 1, g.end(), g[0], [](std::string a, const std::string& b) { return a + ", " + b; }) << '\n';
    j2.push_back({{"algebra", w.to_string()}, {"groups", g}});
  }
  r.text << "table cells matching the fixtures: " << cells << "/" << 2 * ids.size() << '\n';
  auto P = classify(ps, ClassifyOptions{EquivOptions{cfg.budget}, cfg.jobs});
  Report part;
  partition_report(part, P);
  r.text << part.text.str();
  const bool ok = partition_matches(P, expected_partition("ex4.5-partition"));
  r.text << "expected partition " << (ok ? "reproduced" : "DIFFERS") << '\n';
  r.json = {{"multipliers", j1}, {"algebras", j2}, {"cells_matching", cells}, {"partition", part.json["partition"]}, {"matches_expected", ok && cells == 2 * ids.size()}};
  r.csv_header = {"group", "multiplier", "algebra", "class"};
  for (std::size_t i = 0; i < ps.size(); ++i)
    r.csv_rows.push_back({ids[i], join(ps[i].multiplier, "x", "1"), ps[i].ordinary.to_string(), std::to_string(P.class_of[i])});
  return r;
}

// N-part order and K-twist flag of a structured class.
std::pair<std::uint64_t, bool> class_shape(const StructuredGroup& G, const StructuredClass& c) {
  std::uint64_t g = G.m;
  for (const auto& row : c.omega)
    for (auto v : row) g = std::gcd(g, v);
  bool twist = false;
  for (const auto& row : c.beta)
    for (auto v : row) twist |= v != 0;
  return {G.m / g, twist};
}

Report reproduce_ex57(const RunConfig& cfg) {
  Report r;
  auto G = structured_group("ex5.7-G"), H = structured_group("ex5.7-H");
  auto ps = profiles(refs({"ex5.7-G", "ex5.7-H"}), cfg);
  Json groups = Json::array();
  r.csv_header = {"group", "multiplier", "algebra", "scaling_route_agrees"};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& S = i ? H : G;
    auto SP = structured_profile(S);
    std::size_t agree = 0;
    for (std::size_t c = 0; c < SP.types.size(); ++c) {
      auto [d, twist] = class_shape(S, SP.multiplier.classes[c]);
      agree += twisted_degrees_structured(S, d, twist) == SP.types[c];
    }
    const bool all = agree == SP.types.size();
    r.text << ps[i].name << ": CG = " << ps[i].ordinary.to_string() << ", M = " << multiplier_name(ps[i].multiplier)
           << ", scaling route agrees on " << agree << "/" << SP.types.size() << " classes\n";
    groups.push_back({{"name", ps[i].name}, {"algebra", ps[i].ordinary.to_string()}, {"multiplier", ps[i].multiplier},
                      {"scaling_route_agrees", all}});
    r.csv_rows.push_back({ps[i].name, join(ps[i].multiplier, "x", "1"), ps[i].ordinary.to_string(), all ? "1" : "0"});
  }
  auto iso = structured_isomorphism(G, H);
  auto eq = twisted_equivalent(ps[0], ps[1], EquivOptions{cfg.budget});
  r.text << "isomorphic: " << (iso.isomorphic ? "yes" : "no") << " (" << iso.reason << ")\n";
  if (iso.isomorphic) {
    r.text << "  K generators map to";
    for (const auto& v : iso.k_images) r.text << " (" << join(v, ",") << ")";
    r.text << '\n';
  }
  r.text << "twisted equivalent: " << (eq.equivalent ? "yes" : "no") << " (" << eq.reason << ")\n";
  Json ij = {{"isomorphic", iso.isomorphic}, {"reason", iso.reason}, {"k_images", iso.k_images}};
  Json bc = Json::object();
  for (const auto& [p, P] : iso.base_change) bc[std::to_string(p)] = P;
  ij["base_change"] = bc;
  r.json = {{"groups", groups}, {"isomorphism", ij}, {"equivalence", to_json(eq)}};
  return r;
}

Report cmd_export(const std::string& ref) {
  Report r;
  auto g = resolve_group(ref);
  if (!g.table) throw Error(ErrorKind::SizeBound, g.name + " has no Cayley table to export");
  r.text << format_group_definition(g.name, *g.table);
  r.json = {{"name", g.name}, {"definition", format_group_definition(g.name, *g.table)}};
  r.csv_header = {"definition"};
  r.csv_rows.push_back({format_group_definition(g.name, *g.table)});
  return r;
}

Report cmd_fixtures(const std::string& id) {
  Report r;
  r.csv_header = {"id", "field", "value"};
  if (id.ends_with("-partition")) {
    auto P = expected_partition(id);
    r.json = {{"id", P.id}, {"members", P.members}, {"classes", P.classes}};
    for (const auto& c : P.classes) {
      std::string s;
      for (const auto& m : c) s += (s.empty() ? "" : " ") + m;
      r.text << "{" << s << "}\n";
      r.csv_rows.push_back({id, "class", s});
    }
    return r;
  }
  auto f = expected(id);
  r.json["id"] = f.id;
  if (f.multiplier) {
    r.json["multiplier"] = *f.multiplier;
    r.text << "multiplier " << multiplier_name(*f.multiplier) << '\n';
    r.csv_rows.push_back({id, "multiplier", join(*f.multiplier, "x", "1")});
  }
  if (f.ordinary) {
    r.json["ordinary"] = f.ordinary->to_string();
    r.text << "algebra " << f.ordinary->to_string() << '\n';
    r.csv_rows.push_back({id, "algebra", f.ordinary->to_string()});
  }
  for (const auto& w : f.twisted_contains) {
    r.json["twisted_contains"].push_back(w.to_string());
    r.text << "twisted algebra " << w.to_string() << '\n';
    r.csv_rows.push_back({id, "twisted", w.to_string()});
  }
  if (f.central_type) {
    r.json["central_type"] = *f.central_type;
    r.text << "central type " << (*f.central_type ? "yes" : "no") << '\n';
    r.csv_rows.push_back({id, "central_type", *f.central_type ? "1" : "0"});
  }
  if (f.center_order) {
    r.json["center_order"] = *f.center_order;
    r.text << "center order " << *f.center_order << '\n';
    r.csv_rows.push_back({id, "center_order", std::to_string(*f.center_order)});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tgr: Schur multipliers, twisted group algebras and the twisted group ring equivalence"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "seed for the randomized eigen-splitting");
  app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")->check(CLI::Range(1e-15, 1e-3));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cache-dir", cfg.cache_dir, "profile cache directory (default: $TGR_CACHE_DIR, unset = no cache)");
  app.add_flag("--verify-cache", cfg.verify_cache, "recompute cached profiles and compare");
  app.add_option("--budget", cfg.budget, "node budget of the multiplier isomorphism search")->check(CLI::PositiveNumber);

  std::string g1, g2, cls, file, what;
  std::uint64_t order = 0;
  std::function<Report()> run;

  auto* show = app.add_subcommand("show", "group structure");
  show->add_option("group", g1, "catalog id, file:<path>[#name] or path")->required();
  show->callback([&] { run = [&] { return cmd_show(g1); }; });

  auto* mult = app.add_subcommand("multiplier", "Schur multiplier");
  mult->add_option("group", g1)->required();
  mult->callback([&] { run = [&] { return cmd_multiplier(g1, cfg); }; });

  auto* deg = app.add_subcommand("degrees", "Wedderburn type of CG or of a twisted algebra");
  deg->add_option("group", g1)->required();
  deg->add_option("--class", cls, "class coordinates, e.g. 1,0");
  deg->callback([&] { run = [&] { return cmd_degrees(g1, cls, cfg); }; });

  auto* prof = app.add_subcommand("profile", "twisted algebras of every class");
  prof->add_option("group", g1)->required();
  prof->callback([&] { run = [&] { return cmd_profile(g1, cfg); }; });

  auto* cond = app.add_subcommand("conditions", "conditions A-D for a pair");
  cond->add_option("G", g1)->required();
  cond->add_option("H", g2)->required();
  cond->callback([&] { run = [&] { return cmd_conditions(g1, g2, cfg); }; });

  auto* eq = app.add_subcommand("equiv", "decide the twisted group ring equivalence");
  eq->add_option("G", g1)->required();
  eq->add_option("H", g2)->required();
  eq->callback([&] { run = [&] { return cmd_equiv(g1, g2, cfg); }; });

  auto* cl = app.add_subcommand("classify", "partition into equivalence classes");
  auto* cl_order = cl->add_option("--order", order, "catalog family of this order");
  auto* cl_file = cl->add_option("--file", file, "list of references or a definition file");
  cl_order->excludes(cl_file);
  cl->callback([&] {
    if (!*cl_order && !*cl_file) throw CLI::RequiredError("--order or --file");
    run = [&] {
      auto groups = file.empty() ? refs(family_for_order(order)) : load_groups(file);
      return classify_profiles(profiles(groups, cfg), cfg);
    };
  });

  auto* sv = app.add_subcommand("survey-central-type", "central-type members of a catalog");
  sv->add_option("--file", file, "definition file or list")->required();
  sv->callback([&] { run = [&] { return cmd_survey(file, cfg); }; });

  auto* au = app.add_subcommand("audit-theorem-1.5", "condition patterns and D => A, C");
  au->callback([&] { run = [&] { return cmd_audit(cfg); }; });

  auto* rp = app.add_subcommand("reproduce", "rebuild a reference classification");
  rp->add_option("what", what)->required()->check(CLI::IsMember({"ex4.5", "omega16", "omega81", "ex5.7"}));
  rp->callback([&] {
    run = [&] {
      if (what == "omega16") return reproduce_partition("order16", "omega16-partition", cfg);
      if (what == "omega81") return reproduce_partition("p4@3", "omega81-partition", cfg);
      if (what == "ex4.5") return reproduce_ex45(cfg);
      return reproduce_ex57(cfg);
    };
  });

  auto* ex = app.add_subcommand("export", "print a group in the definition format");
  ex->add_option("group", g1)->required();
  ex->callback([&] { run = [&] { return cmd_export(g1); }; });

  auto* fx = app.add_subcommand("fixtures", "expected facts of a catalog id or partition");
  fx->add_option("id", g1)->required();
  fx->callback([&] { run = [&] { return cmd_fixtures(g1); }; });

  auto* ls = app.add_subcommand("list", "catalog ids");
  ls->callback([&] {
    run = [&] {
      Report r;
      r.csv_header = {"id", "order", "description"};
      for (const auto& id : catalog_ids()) {
        auto e = catalog_entry(id);
        r.text << id << "  " << e.order << "  " << e.description << '\n';
        r.json.push_back({{"id", id}, {"order", e.order}, {"description", e.description}});
        r.csv_rows.push_back({id, std::to_string(e.order), e.description});
      }
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    run().emit(cfg.format);
    return 0;
  } catch (const Error& e) {
    std::cerr << error_record(e).dump() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "InvariantViolation"}, {"message", e.what()}, {"exit_code", 4}}.dump() << '\n';
    return 4;
  }
}
