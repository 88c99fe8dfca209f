#include "tsmv/varpool.hpp"

#include "tsmv/errors.hpp"

namespace tsmv {

int VarPool::var(const std::string& tag) {
  auto [it, inserted] = ids_.try_emplace(tag, static_cast<int>(tags_.size()) + 1);
  if (inserted) tags_.push_back(tag);
  return it->second;
}

int VarPool::fresh(const std::string& prefix) {
  int& counter = fresh_counters_[prefix];
  std::string tag = prefix + ":" + std::to_string(counter++);
  if (ids_.contains(tag)) throw Error("VarPool: fresh tag collision on '" + tag + "'");
  return var(tag);
}

int VarPool::lookup(const std::string& tag) const {
  auto it = ids_.find(tag);
  return it == ids_.end() ? 0 : it->second;
}

const std::string& VarPool::tag(int id) const {
  if (id < 1 || id > size()) throw InputError("VarPool: no variable " + std::to_string(id));
  return tags_[id - 1];
}

}  // namespace tsmv
