#include "mvprob/term.hpp"

#include <cctype>

#include "mvprob/errors.hpp"
#include "mvprob/sampling.hpp"

namespace mvprob {

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr Term::zero() {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Zero;
  return t;
}

TermPtr Term::one() {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::One;
  return t;
}

TermPtr Term::neg(TermPtr x) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Neg;
  t->lhs = std::move(x);
  return t;
}

TermPtr Term::binary(TermKind k, TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (bool(a.lhs) != bool(b.lhs) || bool(a.rhs) != bool(b.rhs)) return false;
  if (a.lhs && !(*a.lhs == *b.lhs)) return false;
  if (a.rhs && !(*a.rhs == *b.rhs)) return false;
  return true;
}

namespace {

// Binding strength of infix operators; higher binds tighter.
int precedence(TermKind k) {
  switch (k) {
    case TermKind::Join: return 1;
    case TermKind::Meet: return 2;
    case TermKind::Oplus: return 3;
    case TermKind::Ominus: return 4;
    case TermKind::Odot: return 5;
    case TermKind::Neg: return 6;
    default: return 7;
  }
}

const char* symbol(TermKind k) {
  switch (k) {
    case TermKind::Join: return "\\/";
    case TermKind::Meet: return "/\\";
    case TermKind::Oplus: return "+";
    case TermKind::Ominus: return "-";
    case TermKind::Odot: return "*";
    default: return "?";
  }
}

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  TermPtr run() {
    TermPtr t = level(1);
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::optional<TermKind> peek_infix() {
    skip();
    auto rest = s_.substr(pos_);
    if (rest.starts_with("\\/")) return TermKind::Join;
    if (rest.starts_with("/\\")) return TermKind::Meet;
    if (rest.starts_with("+")) return TermKind::Oplus;
    if (rest.starts_with("-")) return TermKind::Ominus;
    if (rest.starts_with("*")) return TermKind::Odot;
    return std::nullopt;
  }

  TermPtr level(int prec) {
    if (prec > precedence(TermKind::Odot)) return unary();
    TermPtr lhs = level(prec + 1);
    while (true) {
      auto op = peek_infix();
      if (!op || precedence(*op) != prec) return lhs;
      pos_ += std::string_view(symbol(*op)).size();
      lhs = Term::binary(*op, lhs, level(prec + 1));
    }
  }

  TermPtr unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '~') {
      ++pos_;
      return Term::neg(unary());
    }
    return atom();
  }

  TermPtr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      TermPtr t = level(1);
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')')
        throw ParseError(pos_, "missing ')' for '(' at " + std::to_string(open));
      ++pos_;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto tok = s_.substr(start, pos_ - start);
      if (tok == "0") return Term::zero();
      if (tok == "1") return Term::one();
      throw ParseError(start, "only the constants 0 and 1 are allowed");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Term::var(std::string(s_.substr(start, pos_ - start)));
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::Var: out += t.name; return;
    case TermKind::Zero: out += "0"; return;
    case TermKind::One: out += "1"; return;
    case TermKind::Neg: {
      out += "~";
      const bool paren = precedence(t.lhs->kind) < precedence(TermKind::Neg);
      if (paren) out += "(";
      print_into(*t.lhs, out);
      if (paren) out += ")";
      return;
    }
    default: {
      const int p = precedence(t.kind);
      const bool lp = precedence(t.lhs->kind) < p;
      const bool rp = precedence(t.rhs->kind) <= p;
      if (lp) out += "(";
      print_into(*t.lhs, out);
      if (lp) out += ")";
      out += " ";
      out += symbol(t.kind);
      out += " ";
      if (rp) out += "(";
      print_into(*t.rhs, out);
      if (rp) out += ")";
    }
  }
}

void collect(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Var) out.insert(t.name);
  if (t.lhs) collect(*t.lhs, out);
  if (t.rhs) collect(*t.rhs, out);
}

}  // namespace

TermPtr parse(std::string_view input) { return Parser(input).run(); }

std::string print(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

Elem eval(const Term& t, const Algebra& a, const Env& env) {
  switch (t.kind) {
    case TermKind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw UnboundVariable("unbound variable '" + t.name + "'");
      if (!a.contains(it->second))
        throw AlgebraMismatch(to_string(it->second) + " is not an element of " + a.name());
      return it->second;
    }
    case TermKind::Zero: return a.zero();
    case TermKind::One: return a.one();
    case TermKind::Neg: return a.neg(eval(*t.lhs, a, env));
    default: break;
  }
  const Elem x = eval(*t.lhs, a, env);
  const Elem y = eval(*t.rhs, a, env);
  switch (t.kind) {
    case TermKind::Oplus: return a.oplus(x, y);
    case TermKind::Odot: return a.odot(x, y);
    case TermKind::Ominus: return a.ominus(x, y);
    case TermKind::Join: return a.join(x, y);
    case TermKind::Meet: return a.meet(x, y);
    default: throw InternalInconsistency("unknown term node");
  }
}

PwlFn free_interpret(const Term& t) {
  if (variables(t).size() > 1) throw UnsupportedAlgebra("free interpretation takes one variable");
  switch (t.kind) {
    case TermKind::Var: return PwlFn::identity();
    case TermKind::Zero: return PwlFn::constant(0);
    case TermKind::One: return PwlFn::constant(1);
    case TermKind::Neg: return pwl_neg(free_interpret(*t.lhs));
    default: break;
  }
  const PwlFn f = free_interpret(*t.lhs);
  const PwlFn g = free_interpret(*t.rhs);
  switch (t.kind) {
    case TermKind::Oplus: return pwl_combine(f, g, PwlOp::Oplus);
    case TermKind::Odot: return pwl_combine(f, g, PwlOp::Odot);
    case TermKind::Ominus: return pwl_combine(f, pwl_neg(g), PwlOp::Odot);
    case TermKind::Join: return pwl_combine(f, g, PwlOp::Join);
    case TermKind::Meet: return pwl_combine(f, g, PwlOp::Meet);
    default: throw InternalInconsistency("unknown term node");
  }
}

TermPtr random_term(std::mt19937_64& rng, unsigned depth, const std::vector<std::string>& vars) {
  if (depth == 0 || uniform_below(rng, 4) == 0) {
    const auto pick = uniform_below(rng, vars.size() + 2);
    if (pick == vars.size()) return Term::zero();
    if (pick == vars.size() + 1) return Term::one();
    return Term::var(vars[pick]);
  }
  static constexpr TermKind kOps[] = {TermKind::Neg, TermKind::Oplus, TermKind::Odot,
                                      TermKind::Ominus, TermKind::Join, TermKind::Meet};
  const TermKind k = kOps[uniform_below(rng, 6)];
  TermPtr a = random_term(rng, depth - 1, vars);
  if (k == TermKind::Neg) return Term::neg(a);
  TermPtr b = random_term(rng, depth - 1, vars);
  return Term::binary(k, a, b);
}

}  // namespace mvprob
