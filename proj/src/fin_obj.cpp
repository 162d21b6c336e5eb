#include "decidua/fin_obj.hpp"

#include <ostream>
#include <utility>

#include "decidua/errors.hpp"

namespace decidua {

std::string tag_left(const std::string& elem) { return kTagLeft + elem; }
std::string tag_right(const std::string& elem) { return kTagRight + elem; }

bool has_left_tag(const std::string& elem) {
  return elem.rfind(kTagLeft, 0) == 0;
}

bool has_right_tag(const std::string& elem) {
  return elem.rfind(kTagRight, 0) == 0;
}

std::string strip_tag(const std::string& elem) {
  if (!has_left_tag(elem) && !has_right_tag(elem)) {
    throw InvariantError("element '" + elem + "' carries no sum tag");
  }
  return elem.substr(std::string(kTagLeft).size());
}

FinObj FinObj::make(Form form, std::vector<std::string> elems,
                    std::vector<FinObj> children) {
  auto node = std::make_shared<Node>();
  node->form = form;
  node->elems = std::move(elems);
  node->children = std::move(children);
  node->index.reserve(node->elems.size());
  for (const auto& e : node->elems) {
    if (!node->index.insert(e).second) {
      throw InvariantError("duplicate element '" + e + "' in object");
    }
  }
  return FinObj(std::move(node));
}

FinObj FinObj::empty() { return make(Form::Empty, {}, {}); }

FinObj FinObj::unit() { return unit(kUnitElement); }

FinObj FinObj::unit(std::string elem) {
  return make(Form::Unit, {std::move(elem)}, {});
}

FinObj FinObj::atom(std::vector<std::string> elems) {
  return make(Form::Atom, std::move(elems), {});
}

FinObj FinObj::sum(FinObj left, FinObj right) {
  std::vector<std::string> elems;
  elems.reserve(left.size() + right.size());
  for (const auto& e : left.elems()) elems.push_back(tag_left(e));
  for (const auto& e : right.elems()) elems.push_back(tag_right(e));
  return make(Form::Sum, std::move(elems), {std::move(left), std::move(right)});
}

const FinObj& FinObj::left() const {
  if (form() != Form::Sum) throw ShapeError("left(): object is not a sum");
  return node_->children[0];
}

const FinObj& FinObj::right() const {
  if (form() != Form::Sum) throw ShapeError("right(): object is not a sum");
  return node_->children[1];
}

bool operator==(const FinObj& a, const FinObj& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->form != b.node_->form) return false;
  if (a.node_->elems != b.node_->elems) return false;
  if (a.node_->form == FinObj::Form::Sum) {
    return a.left() == b.left() && a.right() == b.right();
  }
  return true;
}

std::string FinObj::describe() const {
  switch (form()) {
    case Form::Empty:
      return "0";
    case Form::Unit:
      return "1";
    case Form::Atom: {
      std::string s = "{";
      for (std::size_t i = 0; i < elems().size(); ++i) {
        if (i > 0) s += ",";
        s += elems()[i];
      }
      return s + "}";
    }
    case Form::Sum:
      return "(" + left().describe() + "+" + right().describe() + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const FinObj& x) {
  return os << x.describe();
}

}  // namespace decidua
