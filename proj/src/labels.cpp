#include "sqfree/labels.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "sqfree/error.hpp"

namespace sqfree {

LabelTable::LabelTable() : labels_(std::make_shared<const std::vector<std::string>>()) {}

LabelTable::LabelTable(std::vector<std::string> labels) {
  if (labels.size() > VertexSet::kCapacity) {
    throw InvalidArgument("at most 64 vertices are supported, got " + std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidArgument("duplicate label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<unsigned> LabelTable::find(std::string_view label) const {
  const auto& v = *labels_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == label) return static_cast<unsigned>(i);
  }
  return std::nullopt;
}

unsigned LabelTable::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidArgument("unknown label '" + std::string(label) + "'");
}

VertexSet LabelTable::set_of(std::span<const std::string> names) const {
  VertexSet s;
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::vector<std::string> LabelTable::names_of(VertexSet set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (unsigned v : set) out.push_back((*labels_)[v]);
  return out;
}

std::string LabelTable::format(VertexSet set) const {
  std::string out = "{";
  bool first = true;
  for (unsigned v : set) {
    if (!first) out += ',';
    out += (*labels_)[v];
    first = false;
  }
  return out + "}";
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

}  // namespace sqfree
