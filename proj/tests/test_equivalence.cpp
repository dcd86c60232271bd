#include <algorithm>
#include <set>

#include "doctest.h"
#include "tgr/catalog.hpp"
#include "tgr/equivalence.hpp"

using namespace tgr;

namespace {

std::vector<ProfileData> family(const std::string& fam) {
  std::vector<ProfileData> out;
  for (const auto& id : catalog_family(fam)) out.push_back(catalog_profile(id));
  return out;
}

std::set<std::set<std::string>> nontrivial(const EquivPartition& P) {
  std::set<std::set<std::string>> out;
  for (const auto& c : P.classes)
    if (c.size() > 1) {
      std::set<std::string> s;
      for (auto i : c) s.insert(P.names[i]);
      out.insert(s);
    }
  return out;
}

std::set<std::set<std::string>> nontrivial(const ExpectedPartition& P) {
  std::set<std::set<std::string>> out;
  for (const auto& c : P.classes) out.insert(std::set<std::string>(c.begin(), c.end()));
  return out;
}

// psi maps every class of G to a class of H with the same algebra.
bool certificate_holds(const ProfileData& G, const ProfileData& H, const EquivResult& R) {
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < G.types.size(); ++i) {
    auto c = G.coords(i);
    std::vector<std::uint64_t> img(H.multiplier.size(), 0);
    for (std::size_t g = 0; g < c.size(); ++g)
      for (std::size_t k = 0; k < img.size(); ++k) img[k] = (img[k] + c[g] * R.psi[g][k]) % H.multiplier[k];
    auto j = H.index_of(img);
    if (G.types[i] != H.types[j] || !seen.insert(j).second) return false;
  }
  return seen.size() == H.types.size();
}

}  // namespace

TEST_CASE("order 16 partition") {
  auto ps = family("order16");
  auto P = classify(ps, {{}, 2});
  CHECK(nontrivial(P) == nontrivial(expected_partition("omega16-partition")));
  CHECK(P.classes.size() == 12);
  for (const auto& c : P.certificates)
    if (c.result.equivalent) CHECK(certificate_holds(ps[c.first], ps[c.second], c.result));
}

TEST_CASE("order 3249 partition") {
  auto ps = family("ex4.5");
  auto P = classify(ps, {{}, 4});
  CHECK(nontrivial(P) == nontrivial(expected_partition("ex4.5-partition")));
  CHECK(P.classes.size() == 15);
  auto g = [&](int i) { return ps[i - 1]; };
  CHECK(twisted_equivalent(g(5), g(8)).equivalent);
  auto r = twisted_equivalent(g(7), g(17));
  CHECK_FALSE(r.equivalent);
  CHECK(r.reason.find("multipliers") != std::string::npos);
}

TEST_CASE("classification is independent of the job count") {
  auto ps = family("order16");
  auto a = classify(ps, {{}, 1});
  auto b = classify(ps, {{}, 8});
  CHECK(a.classes == b.classes);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) CHECK(a.certificates[i].result.psi == b.certificates[i].result.psi);
}

TEST_CASE("condition patterns of the section 3 pairs") {
  for (const auto& x : expected_patterns()) {
    CAPTURE(x.label);
    auto M = conditions(catalog_profile(x.first), catalog_profile(x.second));
    CHECK(M.A == x.A);
    CHECK(M.B == x.B);
    CHECK(M.C == x.C);
    CHECK(M.D == x.D);
    CHECK(M.evidence.size() == 4);
  }
}

TEST_CASE("reflexive, symmetric, abelian singletons") {
  auto c4 = catalog_profile("C4"), v4 = catalog_profile("C2xC2");
  CHECK_FALSE(twisted_equivalent(c4, v4).equivalent);
  CHECK(twisted_equivalent(v4, v4).equivalent);
  auto ps = family("order16");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(twisted_equivalent(ps[i], ps[i]).equivalent);
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      CHECK(twisted_equivalent(ps[i], ps[j]).equivalent == twisted_equivalent(ps[j], ps[i]).equivalent);
  }
}

TEST_CASE("implication audit and central type survey on order 16") {
  auto ps = family("order16");
  std::vector<std::tuple<std::string, ProfileData, ProfileData>> fx;
  for (const auto& x : expected_patterns()) fx.emplace_back(x.label, catalog_profile(x.first), catalog_profile(x.second));
  auto A = implication_audit(fx, ps);
  CHECK(A.rows.size() == 4);
  CHECK(A.pairs_checked == 91);
  CHECK(A.violations.empty());

  auto S = central_type_survey(ps);
  std::vector<std::size_t> by_table;
  auto ids = catalog_family("order16");
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (is_central_type(paper_group(ids[i])).central_type) by_table.push_back(i);
  CHECK(S.members == by_table);
}

TEST_CASE("non-abelian central-type groups of order 81") {
  auto ids = catalog_family("p4@3");
  std::vector<ProfileData> ps;
  for (const auto& id : ids) ps.push_back(catalog_profile(id));
  auto S = central_type_survey(ps);
  std::set<std::string> nonabelian;
  std::set<std::vector<std::uint64_t>> multipliers;
  for (auto i : S.members) {
    CHECK(is_central_type(paper_group(ids[i])).central_type);
    if (!ps[i].abelian) {
      nonabelian.insert(ids[i]);
      multipliers.insert(ps[i].multiplier);
    }
  }
  CHECK(nonabelian == std::set<std::string>{"p4-viii@3", "p4-xiv@3", "p4-xv@3"});
  CHECK(multipliers.size() == 3);
}
