#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace edgechain::detail {

/// Sorted-vector map. World snapshots are cloned wholesale during
/// exhaustive search, so index copies must be one allocation, not one
/// per node.
template <typename Key, typename Value>
class FlatIndex {
 public:
  const Value* find(const Key& key) const {
    auto it = lower(key);
    return (it != data_.end() && it->first == key) ? &it->second : nullptr;
  }

  Value* find(const Key& key) {
    auto it = lower(key);
    return (it != data_.end() && it->first == key) ? &it->second : nullptr;
  }

  void insert_or_assign(Key key, Value value) {
    auto it = lower(key);
    if (it != data_.end() && it->first == key) {
      it->second = std::move(value);
    } else {
      data_.insert(it, {std::move(key), std::move(value)});
    }
  }

  bool erase(const Key& key) {
    auto it = lower(key);
    if (it == data_.end() || it->first != key) return false;
    data_.erase(it);
    return true;
  }

  void clear() { data_.clear(); }
  std::size_t size() const { return data_.size(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  friend bool operator==(const FlatIndex&, const FlatIndex&) = default;

 private:
  using Entry = std::pair<Key, Value>;

  typename std::vector<Entry>::iterator lower(const Key& key) {
    return std::lower_bound(
        data_.begin(), data_.end(), key,
        [](const Entry& entry, const Key& k) { return entry.first < k; });
  }

  typename std::vector<Entry>::const_iterator lower(const Key& key) const {
    return std::lower_bound(
        data_.begin(), data_.end(), key,
        [](const Entry& entry, const Key& k) { return entry.first < k; });
  }

  std::vector<Entry> data_;
};

}  // namespace edgechain::detail
