#include "combinorm/ordinal.hpp"

#include <cctype>
#include <regex>

#include "combinorm/errors.hpp"

namespace combinorm {

struct Ordinal::Node {
  Kind kind = Kind::zero;
  std::optional<Ordinal> pred;
  Sequence seq;
  std::string label;
  std::optional<std::pair<int, int>> cnf;
  int shift = 0;
};

Ordinal Ordinal::zero() {
  static const Ordinal z(std::make_shared<const Node>(Node{Kind::zero, std::nullopt, {}, "0", std::pair{0, 0}, 0}));
  return z;
}

Ordinal Ordinal::finite(int n) { return omega_times(0, n); }

Ordinal Ordinal::omega() { return omega_times(1, 0); }

Ordinal Ordinal::omega_times(int a, int b, int ladder_shift) {
  if (a < 0 || b < 0) throw InvalidArgument("ordinal coefficients must be non-negative");
  if (a == 0 && b == 0) {
    if (ladder_shift == 0) return zero();
    return Ordinal(std::make_shared<const Node>(Node{Kind::zero, std::nullopt, {}, "0", std::pair{0, 0}, ladder_shift}));
  }
  if (b > 0) {
    Ordinal pred = omega_times(a, b - 1, ladder_shift);
    Node n{Kind::successor, pred, {}, "", std::pair{a, b}, ladder_shift};
    return Ordinal(std::make_shared<const Node>(std::move(n)));
  }
  Sequence seq = [a, ladder_shift](int k) { return omega_times(a - 1, k + ladder_shift, ladder_shift); };
  Node n{Kind::limit, std::nullopt, std::move(seq), "", std::pair{a, 0}, ladder_shift};
  return Ordinal(std::make_shared<const Node>(std::move(n)));
}

Ordinal Ordinal::successor(const Ordinal& of) {
  Node n{Kind::successor, of, {}, "", std::nullopt, of.ladder_shift()};
  if (auto c = of.canonical_form()) n.cnf = std::pair{c->first, c->second + 1};
  return Ordinal(std::make_shared<const Node>(std::move(n)));
}

Ordinal Ordinal::limit(Sequence seq, std::string label) {
  Node n{Kind::limit, std::nullopt, std::move(seq), std::move(label), std::nullopt, 0};
  return Ordinal(std::make_shared<const Node>(std::move(n)));
}

Ordinal Ordinal::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const std::regex finite_re("^([0-9]+)$");
  static const std::regex omega_re("^(?:omega|w)(?:\\*([0-9]+))?(?:\\+([0-9]+))?$");
  std::smatch m;
  if (std::regex_match(s, m, finite_re)) return finite(std::stoi(m[1]));
  if (std::regex_match(s, m, omega_re)) {
    int a = m[1].matched ? std::stoi(m[1]) : 1;
    int b = m[2].matched ? std::stoi(m[2]) : 0;
    return omega_times(a, b);
  }
  throw InvalidArgument("unsupported ordinal '" + text + "' (expected n, omega, omega*a+b)");
}

Ordinal::Kind Ordinal::kind() const { return node_->kind; }

const Ordinal& Ordinal::predecessor() const {
  if (node_->kind != Kind::successor) throw InvalidArgument("ordinal is not a successor");
  return *node_->pred;
}

Ordinal Ordinal::ladder(int k) const {
  if (node_->kind != Kind::limit) throw InvalidArgument("ordinal is not a limit");
  if (!node_->seq) throw LadderMissing("limit ordinal " + str() + " has no fundamental sequence");
  if (k < 1) throw InvalidArgument("ladder index starts at 1");
  return node_->seq(k);
}

std::optional<std::pair<int, int>> Ordinal::canonical_form() const { return node_->cnf; }

int Ordinal::ladder_shift() const { return node_->shift; }

std::string Ordinal::str() const {
  if (node_->cnf) {
    auto [a, b] = *node_->cnf;
    if (a == 0) return std::to_string(b);
    std::string s = a == 1 ? "omega" : "omega*" + std::to_string(a);
    if (b > 0) s += "+" + std::to_string(b);
    return s;
  }
  if (node_->kind == Kind::successor) return node_->pred->str() + "+1";
  return node_->label.empty() ? "limit" : node_->label;
}

}  // namespace combinorm
