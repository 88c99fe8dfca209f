#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace tsmv {

// Hands out propositional variable ids 1..size(), each bound to a role tag
// such as "input:x:3" or "sc:+:r:5:2". Asking for a tag again returns the id
// allocated for it before, so two pools fed the same request sequence number
// their variables identically.
class VarPool {
 public:
  // Allocates (or recalls) the variable for a tag.
  int var(const std::string& tag);

  // Allocates "<prefix>:<k>" with a per-prefix counter; never reuses.
  int fresh(const std::string& prefix);

  // 0 when the tag has no variable yet.
  int lookup(const std::string& tag) const;

  const std::string& tag(int id) const;
  int size() const { return static_cast<int>(tags_.size()); }
  const std::vector<std::string>& tags_by_id() const { return tags_; }  // [id-1]

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> tags_;
  std::unordered_map<std::string, int> fresh_counters_;
};

}  // namespace tsmv
