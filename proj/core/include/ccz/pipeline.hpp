// Copyright 2026 The ccz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccz/coleman.hpp"
#include "ccz/curve.hpp"
#include "ccz/frobenius.hpp"
#include "ccz/local.hpp"
#include "ccz/roots.hpp"

namespace ccz {

enum class AnnihilatorCase { kGeneric, kLambda0Zero };
const char* to_string(AnnihilatorCase c);

/// Two forms spanning the forms whose integrals vanish on J(Q), rescaled to
/// be nonzero mod p.
struct AnnihilatorBasis {
  HolomorphicVector lambda;  // integrals of w0, w1, w2 from infinity to P0
  int k01 = 0;
  int k02 = 0;
  int k12 = 0;
  DifferentialForm alpha;
  DifferentialForm beta;
  int n_prime = 0;
  AnnihilatorCase kase = AnnihilatorCase::kGeneric;
  std::vector<std::string> warnings;
};

AnnihilatorBasis compute_annihilator(const IntegrationContext& ctx, const CurvePoint& P0);

/// The basis form w_j of least index whose reduction is not in the span of
/// alpha and beta mod p.
int gamma_index(const AnnihilatorBasis& basis);

enum class DiskStatus { kRuledOut, kSearched, kFailed };
const char* to_string(DiskStatus s);

struct RootSummary {
  PadicRecord t;
  int precision = 0;
  bool simple = false;
  friend bool operator==(const RootSummary&, const RootSummary&) = default;
};

/// A point of Z found in one disk.
struct ZeroPoint {
  FpPoint disk;
  PadicRecord t;  // local parameter at the disk's center
  bool infinity = false;
  PadicRecord x;  // monic model
  PadicRecord y;
  friend bool operator==(const ZeroPoint&, const ZeroPoint&) = default;
};

struct DiskAnalysis {
  FpPoint disk;
  DiskKind kind = DiskKind::kGeneric;
  int m = 0;
  int order_alpha = 0;
  int order_beta = 0;
  std::vector<RationalPoint> known_in_disk;  // monic model
  DiskStatus status = DiskStatus::kSearched;
  std::string diagnostic;
  // Filled by search_disk.
  bool center_known = false;
  int M = 0;
  int n_prime = 0;
  int k_f = 0;
  int k_g = 0;
  int bound_f = 0;
  int bound_g = 0;
  bool discriminant_f = false;  // nonzero discriminant of the truncation
  bool discriminant_g = false;
  bool certified_f = false;  // every root in pZ_p is a certified simple root
  bool certified_g = false;
  bool valuation_lemma = true;
  std::vector<RootSummary> roots_f;
  std::vector<RootSummary> roots_g;
  std::vector<ZeroPoint> common;
  friend bool operator==(const DiskAnalysis&, const DiskAnalysis&) = default;
};

/// Orders of vanishing and known-point counts for every disk modulo the
/// involution; disks with #known = m + 1 (and m < p - 2) are ruled out.
std::vector<DiskAnalysis> triage_disks(const IntegrationContext& ctx, const AnnihilatorBasis& basis,
                                       const std::vector<RationalPoint>& known);

/// Root search in one disk (also usable on disks triage ruled out).
void search_disk(const IntegrationContext& ctx, const AnnihilatorBasis& basis, DiskAnalysis& disk,
                 std::optional<int> M_override = std::nullopt);

enum class PointClass { kKnown, kNewRational, kWeierstrass, kTorsion, kOtherAlgebraic, kUnrecognized };
const char* to_string(PointClass c);

/// A classified point of Z. Coordinates of recognized points are given in the
/// input model.
struct ClassifiedPoint {
  PointClass kind = PointClass::kUnrecognized;
  ZeroPoint point;
  std::optional<RationalPoint> rational;  // input model
  std::string x_minpoly;                  // input model, variable x
  std::string y_minpoly;                  // input model, variable y
  std::string field;                      // "Q" or "Q(sqrt(d))"
  int gamma = 0;
  std::optional<PadicRecord> gamma_integral;
  bool gamma_vanishes = false;
  std::string reduction_order;  // order of [Q - infinity] mod p, if computed
  friend bool operator==(const ClassifiedPoint&, const ClassifiedPoint&) = default;
};

struct ZeroSetReport {
  std::string id;
  std::vector<std::string> coefficients;  // input model, constant first
  std::string scaling_u;
  std::string scaling_v;
  std::vector<std::string> monic_coefficients;
  Prime p = 0;
  int N = 0;
  int n = 0;
  int n_prime = 0;
  int frobenius_precision = 0;
  RationalPoint P0;  // input model
  std::vector<RationalPoint> known;  // input model
  std::vector<bool> known_in_zero_set;
  // Zeta data.
  std::vector<std::string> zeta;  // a0..a6
  std::int64_t curve_points = 0;
  std::string jacobian_order;
  std::int64_t coleman_bound = 0;  // #C(F_p) + 2g - 2
  std::string p0_reduction_order;
  bool order_prime_to_p = false;
  bool p_squared_free = false;
  // Annihilator.
  std::string annihilator_case;
  std::vector<PadicRecord> lambda;
  std::vector<PadicRecord> alpha;
  std::vector<PadicRecord> beta;
  int k01 = 0;
  int k02 = 0;
  int k12 = 0;
  int gamma = 0;
  // Results.
  std::vector<ClassifiedPoint> points;  // Z modulo the involution
  std::vector<DiskAnalysis> disks;
  std::vector<std::string> warnings;
  bool complete = true;  // every disk searched and every point recognized

  std::vector<const ClassifiedPoint*> of_kind(PointClass c) const;
  friend bool operator==(const ZeroSetReport&, const ZeroSetReport&) = default;
};

struct PipelineOptions {
  std::optional<Prime> p;
  std::optional<int> N;  // default 2p + 4
  std::optional<int> M;  // t-adic truncation, default from the truncation policy
  /// Receives one line per disk with m, root counts and precisions.
  std::function<void(const std::string&)> trace;
};

/// First candidate (input model, sorted) whose integrals from infinity do
/// not all vanish at precision n, i.e. a plausible point of infinite order.
std::optional<RationalPoint> choose_base_point(const HyperellipticCurve& curve,
                                               const std::vector<RationalPoint>& candidates,
                                               Prime p, int n);

/// Points given in the input model; P0 must be affine and on the curve.
ZeroSetReport run_pipeline(const HyperellipticCurve& curve, const RationalPoint& P0,
                           const std::vector<RationalPoint>& known,
                           const PipelineOptions& options = {});

}  // namespace ccz
