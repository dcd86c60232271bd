#pragma once

// Group-definition files, group references, JSON records and the profile cache.
//
// Definition format, one or more blocks per file; '#' starts a comment:
//
//   group <name> order <n>
//   cayley                      followed by n rows of n indices (identity 0)
//   abelian d1 d2 ...
//   semidirect <N> <T>          followed by `gen <t> -> perm <|N| indices>` lines
//   extension <G> mod <d>       followed by |G| rows of |G| cocycle values
//
// <N>, <T>, <G> name an earlier block of the same file or a catalog id.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tgr/clifford.hpp"
#include "tgr/equivalence.hpp"
#include "tgr/error.hpp"
#include "tgr/group.hpp"

namespace tgr {

using Json = nlohmann::ordered_json;

// 2 input, 3 bound or budget, 4 internal.
int exit_code(ErrorKind kind);
Json error_record(const Error& e);

struct DefinedGroup {
  std::string name;
  FiniteGroup group;
};

// Throws ParseError with "source:line:col: message".
std::vector<DefinedGroup> parse_group_file(std::string_view text, const std::string& source);
std::vector<DefinedGroup> read_group_file(const std::filesystem::path& path);
std::string format_group_definition(const std::string& name, const FiniteGroup& G);

struct GroupRef {
  std::string name;
  std::optional<FiniteGroup> table;
  std::optional<StructuredGroup> structured;
  std::size_t order() const;
};

// A catalog id, `file:<path>` (first block), `file:<path>#<name>`, or a path.
GroupRef resolve_group(const std::string& ref);
// Every block of a definition file.
std::vector<GroupRef> resolve_group_file(const std::filesystem::path& path);
// A list file: one reference per line.
std::vector<GroupRef> resolve_group_list(const std::filesystem::path& path);

// SHA-256 (hex) of the group's content, independent of its name.
std::string content_hash(const GroupRef& g);
std::string sha256_hex(std::string_view data);

Json to_json(const WedderburnType& w);
Json to_json(const ProfileData& p);
ProfileData profile_from_json(const Json& j);
Json to_json(const ConditionMatrix& m);
Json to_json(const EquivResult& r);
Json to_json(const EquivPartition& p);

struct ProfileCache {
  // Empty: no caching.
  std::filesystem::path dir;
  // Recompute on hits and fail if the stored record differs.
  bool verify = false;

  static std::filesystem::path default_dir();
  ProfileData get(const GroupRef& g, const WedderburnOptions& opts) const;
};

}  // namespace tgr
