#include "mvprob/pwl.hpp"

#include <algorithm>
#include <sstream>

#include "mvprob/errors.hpp"

namespace mvprob {

namespace {

const Rat& zero_rat() {
  static const Rat r(0);
  return r;
}
const Rat& one_rat() {
  static const Rat r(1);
  return r;
}

bool in_unit(const Rat& v) { return v >= zero_rat() && v <= one_rat(); }

}  // namespace

PwlFn PwlFn::make(std::vector<Rat> breakpoints, std::vector<Linear> pieces) {
  if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
    throw RangeError("pwl: need k+1 breakpoints for k pieces");
  if (breakpoints.front() != zero_rat() || breakpoints.back() != one_rat())
    throw RangeError("pwl: breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i]))
      throw RangeError("pwl: breakpoints must be strictly increasing");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (pieces[i].at(breakpoints[i + 1]) != pieces[i + 1].at(breakpoints[i + 1]))
      throw RangeError("pwl: discontinuity at " + breakpoints[i + 1].str());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (!in_unit(pieces[i].at(breakpoints[i])) || !in_unit(pieces[i].at(breakpoints[i + 1])))
      throw RangeError("pwl: value outside [0,1] near " + breakpoints[i].str());

  PwlFn f;
  f.breaks_.push_back(breakpoints[0]);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!f.pieces_.empty() && f.pieces_.back() == pieces[i]) {
      f.breaks_.back() = breakpoints[i + 1];
    } else {
      f.pieces_.push_back(pieces[i]);
      f.breaks_.push_back(breakpoints[i + 1]);
    }
  }
  return f;
}

PwlFn PwlFn::constant(const Rat& c) { return make({zero_rat(), one_rat()}, {Linear{0, c}}); }

PwlFn PwlFn::linear(const Rat& slope, const Rat& intercept) {
  return make({zero_rat(), one_rat()}, {Linear{slope, intercept}});
}

Rat PwlFn::operator()(const Rat& x) const {
  if (!in_unit(x)) throw RangeError("pwl: argument " + x.str() + " outside [0,1]");
  auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end() - 1, x);
  return pieces_[static_cast<std::size_t>(it - breaks_.begin()) - 1].at(x);
}

std::string PwlFn::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << " | ";
    os << "[" << breaks_[i] << "," << breaks_[i + 1] << "]: " << pieces_[i].slope << "x+"
       << pieces_[i].intercept;
  }
  return os.str();
}

namespace {

Linear operator+(const Linear& a, const Linear& b) {
  return {a.slope + b.slope, a.intercept + b.intercept};
}
Linear operator-(const Linear& a, const Linear& b) {
  return {a.slope - b.slope, a.intercept - b.intercept};
}

struct Segment {
  Rat left;
  Rat right;
  Linear line;
};

// Splits [l, r] at the point where p and q cross (if strictly inside) and
// keeps the smaller (take_min) or larger line on each part.
void extreme_of(const Linear& p, const Linear& q, const Rat& l, const Rat& r, bool take_min,
                std::vector<Segment>& out) {
  Linear d = p - q;
  Rat dl = d.at(l), dr = d.at(r);
  auto pick = [&](const Rat& diff_at) { return (diff_at.sign() <= 0) == take_min ? p : q; };
  if ((dl.sign() <= 0 && dr.sign() <= 0) || (dl.sign() >= 0 && dr.sign() >= 0)) {
    // No strict sign change: one line dominates on the whole interval.
    const Rat& probe = dl.sign() != 0 ? dl : dr;
    out.push_back({l, r, pick(probe)});
    return;
  }
  // d.slope * x + d.intercept = 0
  Rat x = -d.intercept / d.slope;
  out.push_back({l, x, pick(dl)});
  out.push_back({x, r, pick(dr)});
}

std::vector<Rat> merged_breaks(const PwlFn& f, const PwlFn& g) {
  std::vector<Rat> bs;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(bs));
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  return bs;
}

const Linear& piece_on(const PwlFn& f, const Rat& l, const Rat& r) {
  Rat mid = (l + r) / Rat(2);
  auto it = std::upper_bound(f.breakpoints().begin() + 1, f.breakpoints().end() - 1, mid);
  return f.pieces()[static_cast<std::size_t>(it - f.breakpoints().begin()) - 1];
}

PwlFn assemble(const std::vector<Segment>& segs) {
  std::vector<Rat> bs{segs.front().left};
  std::vector<Linear> ps;
  for (const auto& s : segs) {
    ps.push_back(s.line);
    bs.push_back(s.right);
  }
  return PwlFn::make(std::move(bs), std::move(ps));
}

}  // namespace

PwlFn pwl_combine(const PwlFn& f, const PwlFn& g, PwlOp op) {
  auto bs = merged_breaks(f, g);
  std::vector<Segment> segs;
  const Linear one{0, 1};
  const Linear zero{0, 0};
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    const Rat& l = bs[i];
    const Rat& r = bs[i + 1];
    const Linear& pf = piece_on(f, l, r);
    const Linear& pg = piece_on(g, l, r);
    switch (op) {
      case PwlOp::Oplus:
        extreme_of(pf + pg, one, l, r, true, segs);
        break;
      case PwlOp::Odot:
        extreme_of(pf + pg - one, zero, l, r, false, segs);
        break;
      case PwlOp::Join:
        extreme_of(pf, pg, l, r, false, segs);
        break;
      case PwlOp::Meet:
        extreme_of(pf, pg, l, r, true, segs);
        break;
      case PwlOp::Add:
        segs.push_back({l, r, pf + pg});
        break;
    }
  }
  return assemble(segs);
}

PwlFn pwl_neg(const PwlFn& f) {
  std::vector<Linear> ps;
  for (const auto& p : f.pieces()) ps.push_back({-p.slope, one_rat() - p.intercept});
  return PwlFn::make(f.breakpoints(), std::move(ps));
}

PwlFn pwl_scale_shift(const Rat& alpha, const PwlFn& f, const Rat& beta, const PwlFn& g) {
  auto bs = merged_breaks(f, g);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    const Linear& pf = piece_on(f, bs[i], bs[i + 1]);
    const Linear& pg = piece_on(g, bs[i], bs[i + 1]);
    segs.push_back({bs[i], bs[i + 1],
                    Linear{alpha * pf.slope + beta * pg.slope,
                           alpha * pf.intercept + beta * pg.intercept}});
  }
  return assemble(segs);
}

Rat pwl_eval(const PwlFn& f, const Rat& x) { return f(x); }

bool pwl_eq(const PwlFn& f, const PwlFn& g) { return f == g; }

bool is_mcnaughton(const PwlFn& f) {
  return std::all_of(f.pieces().begin(), f.pieces().end(), [](const Linear& p) {
    return p.slope.is_integer() && p.intercept.is_integer();
  });
}

PwlFn example_pm(const PwlFn& a) {
  if (!is_mcnaughton(a)) throw RangeError("example_pm: argument is not a McNaughton function");
  Rat a0 = a(zero_rat()), a1 = a(one_rat());
  return PwlFn::linear(a0 - a1, a1);
}

PwlFn precompose_reflect(const PwlFn& a) {
  const auto& bs = a.breakpoints();
  const auto& ps = a.pieces();
  std::vector<Rat> nb;
  std::vector<Linear> np;
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) nb.push_back(one_rat() - *it);
  for (auto it = ps.rbegin(); it != ps.rend(); ++it)
    np.push_back({-it->slope, it->slope + it->intercept});
  return PwlFn::make(std::move(nb), std::move(np));
}

PwlFn random_mcnaughton(std::mt19937_64& rng, int depth) {
  if (depth <= 0) {
    switch (rng() % 3) {
      case 0: return pwl_neg(PwlFn::identity());
      case 1: return PwlFn::constant(0);
      default: return PwlFn::identity();
    }
  }
  const auto choice = rng() % 5;
  PwlFn lhs = random_mcnaughton(rng, depth - 1);
  if (choice == 0) return pwl_neg(lhs);
  PwlFn rhs = random_mcnaughton(rng, depth - 1);
  static constexpr PwlOp kOps[] = {PwlOp::Oplus, PwlOp::Odot, PwlOp::Join, PwlOp::Meet};
  return pwl_combine(lhs, rhs, kOps[choice - 1]);
}

}  // namespace mvprob
