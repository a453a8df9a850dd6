#pragma once

// Frozen high-precision reference values; see oracle/make_specfn_tables.py.

struct OraclePoint {
  double x;
  double expected;
};

struct IncBetaPoint {
  double x;
  double a;
  double b;
  double expected;
};

#include "oracle/specfn_tables.inc"
