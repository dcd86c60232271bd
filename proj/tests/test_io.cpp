#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "tgr/catalog.hpp"
#include "tgr/io.hpp"

using namespace tgr;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_group_file(text, "t.grp");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("definition blocks") {
  auto gs = parse_group_file(R"(# three small groups
group c3 order 3
cayley
0 1 2
1 2 0
2 0 1

group s3 order 6
semidirect c3 C2
gen 1 -> perm 0 2 1

group c4 order 4
extension C2 mod 2
0 0
0 1
group v order 12
abelian 2 6
)",
                             "t.grp");
  REQUIRE(gs.size() == 4);
  CHECK(gs[0].group.order() == 3);
  CHECK_FALSE(gs[1].group.is_abelian());
  CHECK(gs[1].group.order() == 6);
  CHECK(abelian_invariants(gs[2].group) == std::vector<std::uint64_t>{4});
  CHECK(abelian_invariants(gs[3].group) == std::vector<std::uint64_t>{2, 6});
}

TEST_CASE("definition round trip") {
  auto G = paper_group("order16-viii");
  auto gs = parse_group_file(format_group_definition("g", G), "x");
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].group.table().size() == G.table().size());
  CHECK(std::equal(G.table().begin(), G.table().end(), gs[0].group.table().begin()));
}

TEST_CASE("parse diagnostics") {
  CHECK(parse_error("group a order 2\ncayley\n0 1\n1\n") == "t.grp:4:1: row has 1 entries, expected 2");
  CHECK(parse_error("group a order 2\ncayley\n0 1\n1 x\n") == "t.grp:4:3: expected element index, got 'x'");
  CHECK(parse_error("group a order 2\ncayley\n0 1\n1 2\n") == "t.grp:4:3: element index 2 out of range (< 2)");
  CHECK(parse_error("group a order 2\ncayley\n0 1\n") == "t.grp:4:1: unexpected end of input, expected element index");
  CHECK(parse_error("group a order 3\nabelian 2\n") == "t.grp:1:15: declared order 3 but the definition gives 2");
  CHECK(parse_error("grp a order 3\n") == "t.grp:1:1: expected 'group <name> order <n>'");
  CHECK(parse_error("group a order 2\nsemidirect z C2\n") == "t.grp:2:12: unknown group 'z'");
  CHECK(parse_error("group a order 2\nfoo\n") ==
        "t.grp:2:1: expected 'cayley', 'abelian', 'semidirect' or 'extension', got 'foo'");
  CHECK(parse_error("") == "t.grp:1:1: no group definitions");
  auto bad = parse_error("group a order 3\ncayley\n0 1 2\n1 0 2\n2 2 0\n");
  CHECK(bad.rfind("t.grp:2:1: ", 0) == 0);
  auto cocycle = parse_error("group a order 4\nextension C2 mod 2\n0 1\n1 1\n");
  CHECK(cocycle == "t.grp:2:1: cocycle is not normalized");
  auto perm = parse_error("group a order 6\nsemidirect C3 C2\ngen 1 -> perm 0 1 1\n");
  CHECK(perm.rfind("t.grp:2:1: ", 0) == 0);
}

TEST_CASE("group references and hashing") {
  auto a = resolve_group("order16-x");
  auto b = resolve_group("order16-ix");
  CHECK(a.table);
  CHECK(resolve_group("ex5.7-G").structured);
  CHECK(content_hash(a) == content_hash(resolve_group("order16-x")));
  CHECK(content_hash(a) != content_hash(b));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK_THROWS_AS(resolve_group("no-such-group"), Error);
  CHECK_THROWS_AS(resolve_group("file:/nonexistent/x.grp"), Error);
}

TEST_CASE("profile JSON and cache") {
  auto dir = std::filesystem::temp_directory_path() / "tgr-test-cache";
  std::filesystem::remove_all(dir);
  auto g = resolve_group("ex3.2-H");
  WedderburnOptions opts;
  ProfileCache none;
  auto p = none.get(g, opts);
  auto q = profile_from_json(to_json(p));
  CHECK(q.types == p.types);
  CHECK(q.multiplier == p.multiplier);
  CHECK(to_json(q).dump() == to_json(p).dump());

  ProfileCache cache{dir, false};
  auto first = cache.get(g, opts);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  ProfileCache verify{dir, true};
  auto second = verify.get(g, opts);
  CHECK(to_json(first).dump() == to_json(second).dump());
  CHECK(to_json(first).dump() == to_json(p).dump());
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(ErrorKind::ParseError) == 2);
  CHECK(exit_code(ErrorKind::UnknownId) == 2);
  CHECK(exit_code(ErrorKind::SizeBound) == 3);
  CHECK(exit_code(ErrorKind::SearchBudgetExceeded) == 3);
  CHECK(exit_code(ErrorKind::InvariantViolation) == 4);
  auto j = error_record(Error(ErrorKind::UnknownId, "x"));
  CHECK(j["error"] == "UnknownId");
}
