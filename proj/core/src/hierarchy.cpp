#include "kdvspec/hierarchy.hpp"

namespace kdvspec {

Hierarchy::Hierarchy(unsigned max_n) {
  kdv_.push_back(DiffPoly::u(1));
  v_.push_back(DiffPoly(1));
  p_.push_back(FormalOp::d(DiffPoly(1)));
  grow(max_n);
}

Hierarchy& Hierarchy::shared() {
  static Hierarchy h;
  return h;
}

void Hierarchy::grow(unsigned n) {
  std::lock_guard lock(mutex_);
  const DiffPoly u = DiffPoly::u(0), du = DiffPoly::u(1);
  const FormalOp L = schrodinger_formal();
  while (kdv_.size() <= n) {
    const DiffPoly& prev = kdv_.back();
    DiffPoly integral = dp_integrate(prev);
    v_.push_back(integral.scaled(make_rat(1, 2)));
    kdv_.push_back(prev.derivative().derivative().scaled(make_rat(-1, 4)) + u * prev +
                   (du * integral).scaled(make_rat(1, 2)));
  }
  while (p_.size() <= n) {
    std::size_t k = p_.size();
    const DiffPoly& vk = v_[k];
    FormalOp head({vk.derivative().scaled(make_rat(-1, 2)), vk});
    p_.push_back(head + p_.back() * L);
  }
}

DiffPoly Hierarchy::kdv(unsigned n) {
  grow(n);
  std::lock_guard lock(mutex_);
  return kdv_[n];
}

DiffPoly Hierarchy::v(unsigned n) {
  grow(n);
  std::lock_guard lock(mutex_);
  return v_[n];
}

FormalOp Hierarchy::p_odd(unsigned n) {
  grow(n);
  std::lock_guard lock(mutex_);
  return p_[n];
}

DiffPoly Hierarchy::kdv_ext(unsigned n) {
  DiffPoly r = kdv(n);
  for (unsigned l = 0; l < n; ++l) r += DiffPoly(MPoly::var(sym::c(n - l))) * kdv(l);
  return r;
}

FormalOp Hierarchy::p_hat(unsigned n) {
  FormalOp r = p_odd(n);
  for (unsigned l = 0; l < n; ++l) r += p_odd(l).left_scaled(DiffPoly(MPoly::var(sym::c(n - l))));
  return r;
}

bool Hierarchy::lax_check(unsigned n) {
  FormalOp c = op_commutator(p_odd(n), schrodinger_formal());
  return c == FormalOp::constant(kdv(n));
}

bool Hierarchy::lax_check_ext(unsigned n) {
  FormalOp c = op_commutator(p_hat(n), schrodinger_formal());
  return c == FormalOp::constant(kdv_ext(n));
}

unsigned Hierarchy::cached() const {
  std::lock_guard lock(mutex_);
  return static_cast<unsigned>(kdv_.size()) - 1;
}

}  // namespace kdvspec
