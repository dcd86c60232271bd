#include "tgr/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "tgr/catalog.hpp"

namespace tgr {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeBound:
    case ErrorKind::Timeout:
    case ErrorKind::SearchBudgetExceeded:
      return 3;
    case ErrorKind::InvariantViolation:
    case ErrorKind::NumericalDegeneracy:
    case ErrorKind::RootMatchFailure:
      return 4;
    default:
      return 2;
  }
}

Json error_record(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  j["exit_code"] = exit_code(e.kind());
  return j;
}

namespace {

struct Token {
  std::string text;
  std::size_t col;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : lines_(tokenize(text)), source_(std::move(source)) {}

  std::vector<DefinedGroup> run() {
    std::vector<DefinedGroup> out;
    while (at_ < lines_.size()) out.push_back(block(out));
    if (out.empty()) fail(1, 1, "no group definitions");
    return out;
  }

 private:
  std::vector<Line> lines_;
  std::string source_;
  std::size_t at_ = 0;

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw Error(ErrorKind::ParseError, source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
  [[noreturn]] void fail(const Line& l, const Token& t, const std::string& msg) const { fail(l.number, t.col, msg); }
  [[noreturn]] void fail_end(const std::string& msg) const {
    fail(lines_.empty() ? 1 : lines_.back().number + 1, 1, msg);
  }

  std::uint64_t number(const Line& l, const Token& t, std::uint64_t limit, const char* what) const {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(l, t, std::string("expected ") + what + ", got '" + t.text + "'");
    if (v >= limit) fail(l, t, std::string(what) + " " + t.text + " out of range (< " + std::to_string(limit) + ")");
    return v;
  }

  const Line& next(const char* what) {
    if (at_ >= lines_.size()) fail_end(std::string("unexpected end of input, expected ") + what);
    return lines_[at_++];
  }

  FiniteGroup lookup(const std::vector<DefinedGroup>& done, const Line& l, const Token& t) const {
    for (const auto& d : done)
      if (d.name == t.text) return d.group;
    if (is_catalog_id(t.text)) {
      try {
        return paper_group(t.text);
      } catch (const Error& e) {
        fail(l, t, std::string("cannot build '") + t.text + "': " + e.what());
      }
    }
    fail(l, t, "unknown group '" + t.text + "'");
  }

  // Reads `rows` lines of `rows` numbers below `limit`.
  std::vector<std::uint32_t> matrix(std::size_t rows, std::uint64_t limit, const char* what) {
    std::vector<std::uint32_t> v;
    v.reserve(rows * rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const Line& l = next(what);
      if (l.tokens[0].text == "group") fail(l, l.tokens[0], "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
      if (l.tokens.size() != rows)
        fail(l.number, l.tokens[std::min(l.tokens.size(), rows) - 1].col,
             "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(rows));
      for (const auto& t : l.tokens) v.push_back(static_cast<std::uint32_t>(number(l, t, limit, what)));
    }
    return v;
  }

  DefinedGroup block(const std::vector<DefinedGroup>& done) {
    const Line& head = next("group header");
    const auto& ht = head.tokens;
    if (ht[0].text != "group") fail(head, ht[0], "expected 'group <name> order <n>'");
    if (ht.size() != 4 || ht[2].text != "order")
      fail(head, ht[std::min<std::size_t>(ht.size() - 1, 2)], "expected 'group <name> order <n>'");
    const std::string name = ht[1].text;
    for (const auto& d : done)
      if (d.name == name) fail(head, ht[1], "group '" + name + "' defined twice");
    const std::uint64_t n = number(head, ht[3], 1u << 16, "order");
    if (n == 0) fail(head, ht[3], "order must be positive");

    const Line& kind = next("'cayley', 'abelian', 'semidirect' or 'extension'");
    const auto& kt = kind.tokens;
    FiniteGroup G;
    auto wrap = [&](const Line& l, auto&& build) {
      try {
        return build();
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        fail(l, l.tokens[0], std::string(to_string(e.kind())) + ": " + e.what());
      }
    };
    if (kt[0].text == "cayley") {
      if (kt.size() != 1) fail(kind, kt[1], "unexpected token after 'cayley'");
      auto table = matrix(n, n, "element index");
      G = wrap(kind, [&] { return FiniteGroup::from_table(n, std::move(table), {}, name); });
    } else if (kt[0].text == "abelian") {
      if (kt.size() < 2) fail(kind, kt[0], "expected at least one cyclic factor");
      std::uint64_t total = 1;
      for (std::size_t i = 1; i < kt.size(); ++i) {
        auto d = number(kind, kt[i], 1u << 16, "cyclic order");
        if (d == 0) fail(kind, kt[i], "cyclic order must be positive");
        total *= d;
        if (total > n) fail(kind, kt[i], "factors exceed the declared order");
        G = direct_product(G, make_cyclic(d));
      }
    } else if (kt[0].text == "semidirect") {
      if (kt.size() != 3) fail(kind, kt[0], "expected 'semidirect <N> <T>'");
      FiniteGroup N = lookup(done, kind, kt[1]), T = lookup(done, kind, kt[2]);
      Action act;
      while (at_ < lines_.size() && lines_[at_].tokens[0].text == "gen") {
        const Line& l = lines_[at_++];
        const auto& t = l.tokens;
        if (t.size() < 4 || t[2].text != "->" || t[3].text != "perm")
          fail(l, t[std::min<std::size_t>(t.size() - 1, 2)], "expected 'gen <t> -> perm <images>'");
        if (t.size() != 4 + N.order())
          fail(l, t.back(), "perm has " + std::to_string(t.size() - 4) + " entries, expected " + std::to_string(N.order()));
        act.t_generators.push_back(static_cast<Elem>(number(l, t[1], T.order(), "element index")));
        std::vector<Elem> img;
        for (std::size_t i = 4; i < t.size(); ++i) img.push_back(static_cast<Elem>(number(l, t[i], N.order(), "element index")));
        act.automorphisms.push_back(std::move(img));
      }
      G = wrap(kind, [&] { return semidirect_product(N, T, act).renamed(name); });
    } else if (kt[0].text == "extension") {
      if (kt.size() != 4 || kt[2].text != "mod") fail(kind, kt[0], "expected 'extension <G> mod <d>'");
      FiniteGroup B = lookup(done, kind, kt[1]);
      const auto d = number(kind, kt[3], 1u << 16, "modulus");
      if (d == 0) fail(kind, kt[3], "modulus must be positive");
      CocycleTable alpha{B, static_cast<std::uint32_t>(d), matrix(B.order(), d, "cocycle value")};
      if (!alpha.is_normalized()) fail(kind, kt[0], "cocycle is not normalized");
      if (!alpha.is_cocycle()) fail(kind, kt[0], "values do not satisfy the cocycle identity");
      G = wrap(kind, [&] { return central_extension(alpha).group.renamed(name); });
    } else {
      fail(kind, kt[0], "expected 'cayley', 'abelian', 'semidirect' or 'extension', got '" + kt[0].text + "'");
    }
    if (G.order() != n)
      fail(head, ht[3], "declared order " + std::to_string(n) + " but the definition gives " + std::to_string(G.order()));
    return {name, G.renamed(name)};
  }
};

}  // namespace

std::vector<DefinedGroup> parse_group_file(std::string_view text, const std::string& source) {
  return Parser(text, source).run();
}

std::vector<DefinedGroup> read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ":0:0: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), path.string());
}

std::string format_group_definition(const std::string& name, const FiniteGroup& G) {
  std::ostringstream os;
  const std::size_t n = G.order();
  os << "group " << name << " order " << n << "\ncayley\n";
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) os << (b ? " " : "") << G.mul(a, b);
    os << '\n';
  }
  return os.str();
}

std::size_t GroupRef::order() const {
  if (table) return table->order();
  if (structured) return structured->order();
  return 0;
}

std::vector<GroupRef> resolve_group_file(const std::filesystem::path& path) {
  std::vector<GroupRef> out;
  for (auto& d : read_group_file(path)) out.push_back({d.name, d.group, std::nullopt});
  return out;
}

GroupRef resolve_group(const std::string& ref) {
  std::string path = ref;
  const bool explicit_file = ref.rfind("file:", 0) == 0;
  if (explicit_file) path = ref.substr(5);
  if (explicit_file || (!is_catalog_id(ref) && std::filesystem::exists(path))) {
    std::string want;
    if (auto hash = path.rfind('#'); hash != std::string::npos) {
      want = path.substr(hash + 1);
      path = path.substr(0, hash);
    }
    auto groups = resolve_group_file(path);
    if (want.empty()) return groups.front();
    for (auto& g : groups)
      if (g.name == want) return g;
    throw Error(ErrorKind::UnknownId, path + " has no group named '" + want + "'");
  }
  auto e = catalog_entry(ref);
  GroupRef g;
  g.name = ref;
  if (e.structured)
    g.structured = *e.structured;
  else
    g.table = paper_group(ref);
  return g;
}

std::vector<GroupRef> resolve_group_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ":0:0: cannot open file");
  std::vector<GroupRef> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos && line.rfind("file:", 0) != 0) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r"), e = line.find_last_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto ref = line.substr(b, e - b + 1);
    try {
      if (ref.rfind("file:", 0) != 0 && !is_catalog_id(ref)) {
        auto rel = path.parent_path() / ref;
        if (std::filesystem::exists(rel)) ref = "file:" + rel.string();
      }
      out.push_back(resolve_group(ref));
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::ParseError) throw;
      throw Error(ErrorKind::ParseError,
                  path.string() + ":" + std::to_string(number) + ":" + std::to_string(b + 1) + ": " + err.what());
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, path.string() + ":1:1: no groups listed");
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InvariantViolation, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string content_hash(const GroupRef& g) {
  std::ostringstream os;
  if (g.structured) {
    const auto& s = *g.structured;
    os << "structured " << s.m << ' ' << s.rank;
    for (auto k : s.k) os << " k" << k;
    for (const auto& A : s.action)
      for (const auto& row : A)
        for (auto v : row) os << ' ' << v;
  } else if (g.table) {
    os << "table " << g.table->order();
    for (auto v : g.table->table()) os << ' ' << v;
  }
  return sha256_hex(os.str());
}

Json to_json(const WedderburnType& w) {
  Json parts = Json::array();
  for (auto [d, k] : w.parts) parts.push_back({{"degree", d}, {"count", k}});
  return parts;
}

namespace {

WedderburnType type_from_json(const Json& j) {
  WedderburnType w;
  for (const auto& p : j) w.parts.emplace_back(p.at("degree").get<std::uint64_t>(), p.at("count").get<std::uint64_t>());
  return w;
}

}  // namespace

Json to_json(const ProfileData& p) {
  Json j;
  j["name"] = p.name;
  j["order"] = p.order;
  j["abelian"] = p.abelian;
  j["route"] = p.route;
  j["ordinary"] = p.ordinary.to_string();
  j["ordinary_parts"] = to_json(p.ordinary);
  j["multiplier"] = p.multiplier;
  Json types = Json::array();
  for (std::size_t i = 0; i < p.types.size(); ++i)
    types.push_back({{"class", p.coords(i)}, {"order", p.class_order(i)}, {"type", p.types[i].to_string()},
                     {"parts", to_json(p.types[i])}});
  j["twisted"] = types;
  j["central_type"] = p.central_type();
  return j;
}

ProfileData profile_from_json(const Json& j) {
  ProfileData p;
  p.name = j.at("name").get<std::string>();
  p.order = j.at("order").get<std::uint64_t>();
  p.abelian = j.at("abelian").get<bool>();
  p.route = j.at("route").get<std::string>();
  p.ordinary = type_from_json(j.at("ordinary_parts"));
  p.multiplier = j.at("multiplier").get<std::vector<std::uint64_t>>();
  for (const auto& t : j.at("twisted")) p.types.push_back(type_from_json(t.at("parts")));
  return p;
}

Json to_json(const ConditionMatrix& m) {
  Json j;
  j["A"] = m.A;
  j["B"] = m.B;
  j["C"] = m.C;
  j["D"] = m.D;
  j["pattern"] = m.pattern();
  Json ev = Json::array();
  for (const auto& e : m.evidence) ev.push_back({{"condition", std::string(1, e.condition)}, {"holds", e.holds}, {"detail", e.detail}});
  j["evidence"] = ev;
  return j;
}

Json to_json(const EquivResult& r) {
  Json j;
  j["equivalent"] = r.equivalent;
  j["psi"] = r.psi;
  j["reason"] = r.reason;
  return j;
}

Json to_json(const EquivPartition& p) {
  Json j;
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json names = Json::array();
    for (auto i : c) names.push_back(p.names[i]);
    classes.push_back(names);
  }
  j["classes"] = classes;
  Json certs = Json::array();
  for (const auto& c : p.certificates) {
    auto r = to_json(c.result);
    r["first"] = p.names[c.first];
    r["second"] = p.names[c.second];
    certs.push_back(r);
  }
  j["certificates"] = certs;
  return j;
}

std::filesystem::path ProfileCache::default_dir() {
  if (const char* env = std::getenv("TGR_CACHE_DIR"); env && *env) return env;
  return {};
}

namespace {

ProfileData compute_profile(const GroupRef& g, const WedderburnOptions& opts) {
  if (g.structured) return profile_data(*g.structured);
  return profile_data(*g.table, g.name, opts);
}

// Cache records do not store the name; the same content may appear under several.
Json stored(const ProfileData& p) {
  auto j = to_json(p);
  j.erase("name");
  return j;
}

}  // namespace

ProfileData ProfileCache::get(const GroupRef& g, const WedderburnOptions& opts) const {
  if (dir.empty()) return compute_profile(g, opts);
  std::ostringstream key;
  key << content_hash(g) << " seed " << opts.seed << " tol " << opts.tolerance << " v1";
  const auto file = dir / (sha256_hex(key.str()) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    Json j;
    try {
      in >> j;
      j["name"] = g.name;
      auto p = profile_from_json(j);
      if (verify) {
        auto fresh = compute_profile(g, opts);
        check_invariant(stored(fresh) == stored(p), "cached profile of " + g.name + " differs from a fresh computation");
      }
      return p;
    } catch (const nlohmann::json::exception&) {
      // Unreadable record: recompute and overwrite.
    }
  }
  auto p = compute_profile(g, opts);
  std::filesystem::create_directories(dir);
  const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::string>{}(g.name));
  {
    std::ofstream out(tmp);
    out << stored(p).dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
  return p;
}

}  // namespace tgr
