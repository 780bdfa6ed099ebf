// Copyright 2026 The tripconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tripconf/newick.hpp"

#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "tripconf/error.hpp"

namespace tripconf {
namespace {

bool IsLabelChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.' || c == '|' ||
         c == '-';
}

// Iterative so that deep caterpillars cannot exhaust the call stack.
class NewickParser {
 public:
  NewickParser(std::string_view text, TaxonSet& taxa) : text_(text), taxa_(taxa) {}

  Topology Parse() {
    Topology topo;
    std::vector<NodeId> open;  // internal nodes whose ')' is pending
    bool expect_subtree = true;
    SkipSpace();
    if (pos_ >= text_.size()) Fail("empty input");
    while (true) {
      SkipSpace();
      if (expect_subtree) {
        const NodeId node = static_cast<NodeId>(topo.nodes.size());
        topo.nodes.emplace_back();
        if (open.empty()) {
          if (topo.root != kNoNode) Fail("unexpected subtree after root");
          topo.root = node;
        } else {
          topo.nodes[open.back()].children.push_back(node);
        }
        if (Peek() == '(') {
          ++pos_;
          open.push_back(node);
          continue;
        }
        const std::size_t at = pos_;
        std::string label = ReadLabel();
        if (label.empty()) Fail("expected a leaf label", at);
        if (taxa_.Find(label)) {
          throw Error(ErrorCode::kDuplicateLabel,
                      "duplicate leaf label '" + label + "' at offset " + std::to_string(at));
        }
        topo.nodes[node].taxon = taxa_.Intern(label);
        expect_subtree = false;
        SkipBranchLength();
        continue;
      }
      const char c = Peek();
      if (c == ',') {
        if (open.empty()) Fail("',' outside parentheses");
        ++pos_;
        expect_subtree = true;
      } else if (c == ')') {
        if (open.empty()) Fail("unbalanced ')'");
        ++pos_;
        open.pop_back();
        SkipSpace();
        if (pos_ < text_.size() && (IsLabelChar(text_[pos_]) || text_[pos_] == '\'')) {
          Fail("internal node labels are not supported");
        }
        SkipBranchLength();
      } else if (c == ';') {
        if (!open.empty()) Fail("unbalanced parentheses: missing ')'");
        ++pos_;
        SkipSpace();
        if (pos_ != text_.size()) Fail("trailing content after ';' (one tree per input)");
        break;
      } else if (c == '\0') {
        Fail(open.empty() ? "missing terminating ';'" : "unbalanced parentheses: missing ')'");
      } else {
        Fail(std::string("unexpected character '") + c + "'");
      }
    }
    topo.taxon_count = taxa_.size();
    return topo;
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void Fail(const std::string& what) const { Fail(what, pos_); }
  [[noreturn]] void Fail(const std::string& what, std::size_t at) const {
    throw Error(ErrorCode::kSyntax, "newick syntax error at offset " + std::to_string(at) + ": " +
                                        what);
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos_;
      } else if (c == '[') {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) Fail("unterminated comment");
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  std::string ReadLabel() {
    std::string label;
    if (Peek() == '\'') {
      const std::size_t at = pos_;
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) Fail("unterminated quoted label", at);
        if (text_[pos_] == '\'') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
            label.push_back('\'');
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        label.push_back(text_[pos_++]);
      }
      if (label.empty()) Fail("empty quoted label", at);
      return label;
    }
    while (pos_ < text_.size() && IsLabelChar(text_[pos_])) label.push_back(text_[pos_++]);
    return label;
  }

  void SkipBranchLength() {
    SkipSpace();
    if (Peek() != ':') return;
    ++pos_;
    SkipSpace();
    if (Peek() == '+') ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '.' ||
            text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
    }
    double value = 0.0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto result = std::from_chars(first, last, value);
    if (start == pos_ || result.ec != std::errc() || result.ptr != last) {
      Fail("malformed branch length", start);
    }
  }

  std::string_view text_;
  TaxonSet& taxa_;
  std::size_t pos_ = 0;
};

bool NeedsQuotes(const std::string& label) {
  if (label.empty()) return true;
  for (const char c : label) {
    if (!IsLabelChar(c)) return true;
  }
  return false;
}

void AppendLabel(std::string& out, const std::string& label) {
  if (!NeedsQuotes(label)) {
    out += label;
    return;
  }
  out.push_back('\'');
  for (const char c : label) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
}

}  // namespace

ParsedTree parse_newick(std::string_view text) {
  ParsedTree result;
  Topology topo = NewickParser(text, result.taxa).Parse();
  result.tree = build_tree(topo);
  return result;
}

Tree parse_newick(std::string_view text, const TaxonSet& taxa) {
  TaxonSet local;
  Topology topo = NewickParser(text, local).Parse();
  if (local.size() != taxa.size()) {
    throw Error(ErrorCode::kTaxonMismatch,
                "tree has " + std::to_string(local.size()) + " taxa, expected " +
                    std::to_string(taxa.size()));
  }
  std::vector<TaxonId> to_reference(local.size());
  for (std::size_t i = 0; i < local.size(); ++i) {
    const auto found = taxa.Find(local.Names()[i]);
    if (!found) {
      throw Error(ErrorCode::kTaxonMismatch,
                  "taxon '" + local.Names()[i] + "' does not occur in the first tree");
    }
    to_reference[i] = *found;
  }
  for (auto& node : topo.nodes) {
    if (node.taxon != kNoTaxon) node.taxon = to_reference[node.taxon];
  }
  topo.taxon_count = taxa.size();
  return build_tree(topo);
}

std::string serialize_newick(const Tree& tree, const TaxonSet& taxa) {
  std::string out;
  out.reserve(tree.node_count() * 4);
  // Negative entries close a node; the separator after a child is decided
  // by whether it was its parent's left child.
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const NodeId item = stack.back();
    stack.pop_back();
    if (item < 0) {
      const NodeId v = ~item;
      out.push_back(')');
      if (v != tree.root() && tree.left(tree.parent(v)) == v) out.push_back(',');
      continue;
    }
    if (tree.is_leaf(item)) {
      AppendLabel(out, taxa.Name(tree.taxon(item)));
      if (item != tree.root() && tree.left(tree.parent(item)) == item) out.push_back(',');
      continue;
    }
    out.push_back('(');
    stack.push_back(~item);
    stack.push_back(tree.right(item));
    stack.push_back(tree.left(item));
  }
  out.push_back(';');
  return out;
}

}  // namespace tripconf
