#pragma once

#include <string>
#include <vector>

namespace cli {

/// Built-in functions selectable with --fn.  Lipschitz data is present only
/// where a global constant exists; bounds are cheap dominating envelopes on
/// [0,T] used for truncation budgets.
struct CatalogEntry {
  std::string id;
  std::string definition;
  int arity = 1;
  double (*f1)(double) = nullptr;
  double (*f2)(double, double) = nullptr;
  double lip_m = -1.0;  // < 0: no hint
  double lip_alpha = 1.0;
  double (*bound1)(double) = nullptr;
  double (*bound2)(double, double) = nullptr;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);

/// Trampolines matching szmk_fn1 / szmk_fn2 with ctx = const CatalogEntry*.
double entry_fn1(double x, void* ctx);
double entry_fn2(double x, double y, void* ctx);

}  // namespace cli
