#include "catalog.hpp"

#include <cmath>
#include <numbers>

namespace cli {
namespace {

double one(double) { return 1.0; }
double exp_neg_2x(double x) { return std::exp(-2.0 * x); }
double identity(double x) { return x; }
double cubic_roots(double x) { return (x - 0.5) * (x - 1.0 / 3.0) * (x - 0.25); }
double cube(double x) { return x * x * x; }
double inv_1px(double x) { return 1.0 / (1.0 + x); }
double cos_pix(double x) { return std::cos(std::numbers::pi * x); }

double one_2d(double, double) { return 1.0; }
double uv(double x, double y) { return x * y; }
double wave_2d(double x, double y) { return (1.0 + x) * std::exp(-y) * std::sin(x + y); }

double bound_one(double) { return 1.0; }
double bound_identity(double t) { return t; }
double bound_cubic(double t) { return (1.0 + t) * (1.0 + t) * (1.0 + t); }
double bound_cube(double t) { return t * t * t; }
double bound_one_2d(double, double) { return 1.0; }
double bound_uv(double tx, double ty) { return tx * ty; }
double bound_wave(double tx, double) { return 1.0 + tx; }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"one", "1", 1, one, nullptr, 0.0, 1.0, bound_one, nullptr},
      {"exp-neg-2x", "exp(-2x)", 1, exp_neg_2x, nullptr, 2.0, 1.0, bound_one, nullptr},
      {"identity", "x", 1, identity, nullptr, 1.0, 1.0, bound_identity, nullptr},
      {"cubic-roots", "(x-1/2)(x-1/3)(x-1/4)", 1, cubic_roots, nullptr, -1.0, 1.0,
       bound_cubic, nullptr},
      {"cube", "x^3", 1, cube, nullptr, -1.0, 1.0, bound_cube, nullptr},
      {"inv-1px", "1/(1+x)", 1, inv_1px, nullptr, 1.0, 1.0, bound_one, nullptr},
      {"cos-pix", "cos(pi x)", 1, cos_pix, nullptr, std::numbers::pi, 1.0, bound_one,
       nullptr},
      {"one-2d", "1", 2, nullptr, one_2d, -1.0, 1.0, nullptr, bound_one_2d},
      {"uv", "x*y", 2, nullptr, uv, -1.0, 1.0, nullptr, bound_uv},
      {"wave-2d", "(1+x)exp(-y)sin(x+y)", 2, nullptr, wave_2d, -1.0, 1.0, nullptr,
       bound_wave},
  };
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.id == id) return &entry;
  }
  return nullptr;
}

double entry_fn1(double x, void* ctx) {
  return static_cast<const CatalogEntry*>(ctx)->f1(x);
}

double entry_fn2(double x, double y, void* ctx) {
  return static_cast<const CatalogEntry*>(ctx)->f2(x, y);
}

}  // namespace cli
