#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/vertex_set.hpp"

namespace sqfree {

/// Shared, immutable vertex/variable label table. Copies share storage.
class LabelTable {
 public:
  LabelTable();
  /// Labels must be distinct and at most 64 of them.
  explicit LabelTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::string& operator[](unsigned index) const { return (*labels_)[index]; }
  std::span<const std::string> labels() const { return *labels_; }
  std::optional<unsigned> find(std::string_view label) const;
  /// Throws InvalidArgument on unknown label.
  unsigned index_of(std::string_view label) const;

  VertexSet all() const { return VertexSet::range(static_cast<unsigned>(size())); }
  VertexSet set_of(std::span<const std::string> labels) const;
  std::vector<std::string> names_of(VertexSet set) const;
  std::string format(VertexSet set) const;

  bool same_storage(const LabelTable& other) const { return labels_ == other.labels_; }
  bool operator==(const LabelTable& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Orders labels so that embedded digit runs compare numerically ("x2" < "x10").
bool natural_less(std::string_view a, std::string_view b);

}  // namespace sqfree
