#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

namespace decidua {

// Tag prefixes for elements of a binary sum. The left block of sum(X, Y)
// holds "L·x" for each x in X, the right block "R·y" for each y in Y.
inline constexpr const char* kTagLeft = "L·";
inline constexpr const char* kTagRight = "R·";

// Canonical element of the unit object.
inline constexpr const char* kUnitElement = "•";

std::string tag_left(const std::string& elem);
std::string tag_right(const std::string& elem);
bool has_left_tag(const std::string& elem);
bool has_right_tag(const std::string& elem);
std::string strip_tag(const std::string& elem);

/// A finite object: a structural form (empty, unit, atom, or binary sum)
/// together with its ordered list of element identifiers. Sum objects derive
/// their elements from the summands, left block first. Two objects are equal
/// exactly when their form trees and element lists coincide; nested sums are
/// never flattened.
class FinObj {
 public:
  enum class Form { Empty, Unit, Atom, Sum };

  static FinObj empty();
  static FinObj unit();
  static FinObj unit(std::string elem);
  static FinObj atom(std::vector<std::string> elems);
  static FinObj sum(FinObj left, FinObj right);

  Form form() const { return node_->form; }
  const std::vector<std::string>& elems() const { return node_->elems; }
  std::size_t size() const { return node_->elems.size(); }
  bool contains(const std::string& elem) const {
    return node_->index.count(elem) != 0;
  }

  // Summands; valid only when form() == Form::Sum.
  const FinObj& left() const;
  const FinObj& right() const;

  std::string describe() const;

  friend bool operator==(const FinObj& a, const FinObj& b);
  friend bool operator!=(const FinObj& a, const FinObj& b) { return !(a == b); }

 private:
  struct Node {
    Form form;
    std::vector<std::string> elems;
    std::unordered_set<std::string> index;
    std::vector<FinObj> children;  // empty, or [left, right] for sums
  };

  explicit FinObj(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FinObj make(Form form, std::vector<std::string> elems,
                     std::vector<FinObj> children);

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const FinObj& x);

}  // namespace decidua
