#include "lazy_set.hpp"

#include <algorithm>
#include <cmath>

namespace ergo {

WindowSet restrict_to(const LazySet& set, Window w) {
  check_window(w);
  std::vector<Interval> out;
  auto st = set.stream(w.lo, w.hi);
  while (auto iv = st->next()) {
    if (iv->lo >= w.hi) break;
    out.push_back(*iv);
  }
  return WindowSet(w, std::move(out));
}

namespace {

class VectorStream : public IntervalStream {
 public:
  VectorStream(std::vector<Interval> ivs) : ivs_(std::move(ivs)) {}
  std::optional<Interval> next() override {
    if (idx_ >= ivs_.size()) return std::nullopt;
    return ivs_[idx_++];
  }

 private:
  std::vector<Interval> ivs_;
  std::size_t idx_ = 0;
};

// ---- Hindman blocks ----

class HindmanSet : public LazySet {
 public:
  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    std::vector<Interval> out;
    i64 base = 1;  // 4^n
    for (int n = 0; n <= 30 && base < upto; ++n, base *= 4) {
      if (2 * base > from) out.push_back({base, 2 * base});
    }
    return std::make_unique<VectorStream>(std::move(out));
  }
};

// ---- Periodic residue classes ----

class PeriodicSet : public LazySet {
 public:
  PeriodicSet(i64 m, std::vector<i64> residues) : m_(m) {
    if (m <= 0) throw std::invalid_argument("periodic modulus must be positive");
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    for (i64 r : residues)
      if (r < 0 || r >= m) throw std::invalid_argument("residue out of range");
    // runs of consecutive residues within one period
    for (i64 r : residues) {
      if (!runs_.empty() && r == runs_.back().hi)
        runs_.back().hi = r + 1;
      else
        runs_.push_back({r, r + 1});
    }
    if (runs_.empty()) throw std::invalid_argument("empty residue set");
  }

  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    std::vector<Interval> out;
    i64 k = (from >= 0 ? from / m_ : -((-from + m_ - 1) / m_)) - 1;
    for (; k * m_ < upto; ++k) {
      for (const Interval& r : runs_) {
        Interval iv{k * m_ + r.lo, k * m_ + r.hi};
        if (iv.hi <= from || iv.lo >= upto) continue;
        if (!out.empty() && iv.lo <= out.back().hi)
          out.back().hi = iv.hi;
        else
          out.push_back(iv);
      }
    }
    return std::make_unique<VectorStream>(std::move(out));
  }

 private:
  i64 m_;
  std::vector<Interval> runs_;
};

// ---- Rotation return set ----

class BeattyRotationSet : public LazySet {
 public:
  BeattyRotationSet(DD alpha, DD u, DD v, DD x0)
      : alpha_(alpha), u_(u), v_(v), x0_(x0) {
    if (!(u.hi >= 0.0 && dd_lt(u, v) && v.hi <= 1.0))
      throw std::invalid_argument("arc must satisfy 0 <= u < v <= 1");
  }

  bool member(i64 n) const {
    DD f = dd_frac(dd_add(x0_, dd_mul(dd_from_i64(n), alpha_)));
    // exact dd equality with an endpoint is resolved by half-openness;
    // anything else inside the guard band is ambiguous
    if (!dd_eq(f, u_) && dd_lt(dd_abs(dd_sub(f, u_)), DD(kEndpointGuard)))
      throw PrecisionError("rotation membership within guard band of arc start");
    if (!dd_eq(f, v_) && dd_lt(dd_abs(dd_sub(f, v_)), DD(kEndpointGuard)))
      throw PrecisionError("rotation membership within guard band of arc end");
    return dd_le(u_, f) && dd_lt(f, v_);
  }

  class Stream : public IntervalStream {
   public:
    Stream(const BeattyRotationSet& s, i64 from, i64 upto)
        : set_(s), cursor_(std::max<i64>(from, 0)), upto_(upto) {}
    std::optional<Interval> next() override {
      while (cursor_ < upto_) {
        if (set_.member(cursor_)) {
          i64 start = cursor_++;
          while (cursor_ < upto_ && set_.member(cursor_)) ++cursor_;
          return Interval{start, cursor_};
        }
        ++cursor_;
      }
      return std::nullopt;
    }

   private:
    const BeattyRotationSet& set_;
    i64 cursor_, upto_;
  };

  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    return std::make_unique<Stream>(*this, from, upto);
  }

 private:
  DD alpha_, u_, v_, x0_;
};

// ---- Beatty floor set {floor(n p / q)} ----

class BeattyFloorSet : public LazySet {
 public:
  BeattyFloorSet(i64 p, i64 q) : p_(p), q_(q) {
    if (q < 1 || p < q) throw std::invalid_argument("beatty slope must be >= 1");
  }

  class Stream : public IntervalStream {
   public:
    Stream(i64 p, i64 q, i64 from, i64 upto) : p_(p), q_(q), upto_(upto) {
      n_ = std::max<i64>(1, from > 0 ? (from * q) / p : 1);
      while (n_ > 1 && value(n_ - 1) >= from) --n_;
      while (value(n_) < from && value(n_) < upto) ++n_;
    }
    std::optional<Interval> next() override {
      i64 v = value(n_);
      if (v >= upto_) return std::nullopt;
      i64 start = v;
      while (true) {
        i64 nxt = value(++n_);
        if (nxt != v + 1 || nxt >= upto_) return Interval{start, v + 1};
        v = nxt;
      }
    }

   private:
    i64 value(i64 n) const {
      return static_cast<i64>((static_cast<i128>(n) * p_) / q_);
    }
    i64 p_, q_, n_, upto_;
  };

  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    return std::make_unique<Stream>(p_, q_, from, upto);
  }

 private:
  i64 p_, q_;
};

// ---- Block family with prescribed dyadic-window density ----

class BlockFamilySet : public LazySet {
 public:
  explicit BlockFamilySet(Rational b) : b_(b) {
    if (!(Rational(0) < b && b <= Rational(1)))
      throw std::invalid_argument("block density must be in (0,1]");
  }

  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    std::vector<Interval> out;
    i128 prev_cum = 0;
    i64 top = 2;  // t_n = 2*4^n
    for (int n = 0; n <= 29 && top / 2 < upto; ++n, top *= 4) {
      i128 cum = (b_.num * top) / b_.den;
      i64 len = static_cast<i64>(cum - prev_cum);
      prev_cum = cum;
      if (len > 0 && top > from) out.push_back({top - len, top});
    }
    return std::make_unique<VectorStream>(std::move(out));
  }

 private:
  Rational b_;
};

// ---- Intersection of two streams ----

class IntersectSet : public LazySet {
 public:
  IntersectSet(LazySetPtr a, LazySetPtr b) : a_(std::move(a)), b_(std::move(b)) {}

  class Stream : public IntervalStream {
   public:
    Stream(std::unique_ptr<IntervalStream> a, std::unique_ptr<IntervalStream> b)
        : a_(std::move(a)), b_(std::move(b)) {}
    std::optional<Interval> next() override {
      if (!ca_) ca_ = a_->next();
      if (!cb_) cb_ = b_->next();
      while (ca_ && cb_) {
        i64 lo = std::max(ca_->lo, cb_->lo), hi = std::min(ca_->hi, cb_->hi);
        bool advance_a = ca_->hi < cb_->hi;
        if (advance_a)
          ca_ = a_->next();
        else
          cb_ = b_->next();
        if (lo < hi) return Interval{lo, hi};
      }
      return std::nullopt;
    }

   private:
    std::unique_ptr<IntervalStream> a_, b_;
    std::optional<Interval> ca_, cb_;
  };

  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    return std::make_unique<Stream>(a_->stream(from, upto), b_->stream(from, upto));
  }

 private:
  LazySetPtr a_, b_;
};

class ExplicitSet : public LazySet {
 public:
  explicit ExplicitSet(std::vector<Interval> ivs) {
    std::sort(ivs.begin(), ivs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const Interval& iv : ivs) {
      if (!iv.valid()) throw std::invalid_argument("invalid explicit interval");
      if (!ivs_.empty() && iv.lo <= ivs_.back().hi)
        ivs_.back().hi = std::max(ivs_.back().hi, iv.hi);
      else
        ivs_.push_back(iv);
    }
  }

  std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const override {
    std::vector<Interval> out;
    for (const Interval& iv : ivs_)
      if (iv.hi > from && iv.lo < upto) out.push_back(iv);
    return std::make_unique<VectorStream>(std::move(out));
  }

 private:
  std::vector<Interval> ivs_;
};

}  // namespace

LazySetPtr hindman_blocks() { return std::make_shared<HindmanSet>(); }

LazySetPtr periodic_set(i64 modulus, std::vector<i64> residues) {
  return std::make_shared<PeriodicSet>(modulus, std::move(residues));
}

LazySetPtr beatty_rotation(DD alpha, DD arc_lo, DD arc_hi, DD x0) {
  return std::make_shared<BeattyRotationSet>(alpha, arc_lo, arc_hi, x0);
}

LazySetPtr beatty_floor(i64 p, i64 q) {
  return std::make_shared<BeattyFloorSet>(p, q);
}

LazySetPtr block_family(Rational b) { return std::make_shared<BlockFamilySet>(b); }

LazySetPtr lazy_intersect(LazySetPtr a, LazySetPtr b) {
  return std::make_shared<IntersectSet>(std::move(a), std::move(b));
}

LazySetPtr explicit_intervals(std::vector<Interval> intervals) {
  return std::make_shared<ExplicitSet>(std::move(intervals));
}

}  // namespace ergo
