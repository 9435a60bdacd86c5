#include "kdvspec/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "kdvspec/error.hpp"

namespace kdvspec::sym {
namespace {

constexpr unsigned kMaxC = 16;
constexpr unsigned kMaxU = 64;

class Table {
public:
  Table() {
    for (const char* n : {"x", "eta", "w", "wp", "dwp", "wpt", "dwpt", "tau", "lambda", "mu", "z", "g2", "g3"})
      add(n);
    for (unsigned i = 1; i <= kMaxC; ++i) add("c" + std::to_string(i));
    u0_ = static_cast<Var>(names_.size());
    add("u");
    add("du");
    for (unsigned k = 2; k < kMaxU; ++k) add("d" + std::to_string(k) + "u");
  }

  Var intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return add(std::string(name));
  }

  bool lookup(std::string_view name, Var& out) {
    std::shared_lock lock(mutex_);
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return false;
    out = it->second;
    return true;
  }

  const std::string& name(Var v) {
    std::shared_lock lock(mutex_);
    if (v >= names_.size()) raise(ErrorCode::UnknownSymbol, "variable rank " + std::to_string(v));
    return names_[v];
  }

  Var u0() const { return u0_; }

private:
  Var add(std::string name) {
    Var v = static_cast<Var>(names_.size());
    names_.push_back(name);
    index_.emplace(std::move(name), v);
    return v;
  }

  std::shared_mutex mutex_;
  std::deque<std::string> names_;  // stable references
  std::unordered_map<std::string, Var> index_;
  Var u0_ = 0;
};

Table& table() {
  static Table t;
  return t;
}

Var fixed(const char* n) { return table().intern(n); }

}  // namespace

Var intern(std::string_view name) { return table().intern(name); }
bool lookup(std::string_view name, Var& out) { return table().lookup(name, out); }
const std::string& name(Var v) { return table().name(v); }

Var u_derivative(unsigned order) {
  if (order >= kMaxU) raise(ErrorCode::IndexOutOfRange, "derivative order " + std::to_string(order));
  return table().u0() + order;
}

int u_order(Var v) {
  Var u0 = table().u0();
  if (v >= u0 && v < u0 + kMaxU) return static_cast<int>(v - u0);
  return -1;
}

Var c(unsigned index) {
  if (index == 0 || index > kMaxC) raise(ErrorCode::IndexOutOfRange, "constant c" + std::to_string(index));
  return table().intern("c" + std::to_string(index));
}

Var x() { static const Var v = fixed("x"); return v; }
Var eta() { static const Var v = fixed("eta"); return v; }
Var w() { static const Var v = fixed("w"); return v; }
Var wp() { static const Var v = fixed("wp"); return v; }
Var dwp() { static const Var v = fixed("dwp"); return v; }
Var wpt() { static const Var v = fixed("wpt"); return v; }
Var dwpt() { static const Var v = fixed("dwpt"); return v; }
Var tau() { static const Var v = fixed("tau"); return v; }
Var lambda() { static const Var v = fixed("lambda"); return v; }
Var mu() { static const Var v = fixed("mu"); return v; }
Var z() { static const Var v = fixed("z"); return v; }
Var g2() { static const Var v = fixed("g2"); return v; }
Var g3() { static const Var v = fixed("g3"); return v; }

}  // namespace kdvspec::sym
