#include "it2fls/engine.hpp"

#include "oracles/term_by_term.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace it2fls;

namespace {

const EngineConfig kGcFitted{Form::GcClosed, BoundSource::Fitted, 1e-12};
const EngineConfig kGcExact{Form::GcClosed, BoundSource::Exact, 1e-12};
const EngineConfig kNtFitted{Form::NtClosed, BoundSource::Fitted, 1e-12};
const EngineConfig kNtExact{Form::NtClosed, BoundSource::Exact, 1e-12};

RuleBase collapsed_three_set() {
  RuleBase rb = three_set_rulebase();
  for (auto& p : rb.partitions)
    for (auto& s : p.sets) {
      const double c = center(s);
      s = with_fitted_bounds(make_uncertain_mean(c, c, 0.418));
    }
  return rb;
}

RuleBase split_three_set(double delta) {
  RuleBase rb = three_set_rulebase();
  for (auto& r : rb.rules) {
    r.b_upper = r.b + delta;
    r.b_lower = r.b - delta;
  }
  return rb;
}

RuleBase single_rule(double b, double upper, double lower) {
  // One input, one set whose fitted bounds peak at the requested grades.
  IT2Gaussian<double> mf = make_uncertain_mean(0, 0, 1);
  mf.fitted_umf = ScaledGaussian<double>{0, 1, upper};
  mf.fitted_lmf = ScaledGaussian<double>{0, 1, lower};
  RuleBase rb;
  rb.partitions.push_back(Partition{{-1, 1}, {mf}, {}});
  rb.rules.push_back(Rule{{0}, b, std::nullopt, std::nullopt});
  return rb;
}

}  // namespace

TEST(Fire, OriginOfPreset) {
  const RuleBase rb = three_set_rulebase();
  const FiringIntervals f = fire(rb, BoundSource::Fitted, Eigen::Vector2d(0, 0));
  ASSERT_EQ(f.upper.size(), 9);
  EXPECT_DOUBLE_EQ(f.upper(4), 1.0);
  EXPECT_NEAR(f.lower(4), 0.801025, 1e-15);
}

TEST(Fire, MatchesTermByTermProducts) {
  const RuleBase rb = three_set_rulebase();
  for (bool fitted : {true, false}) {
    const auto src = fitted ? BoundSource::Fitted : BoundSource::Exact;
    for (double x1 : {-1.0, -0.3, 0.2, 0.9})
      for (double x2 : {-0.7, 0.0, 0.55}) {
        const FiringIntervals f = fire(rb, src, Eigen::Vector2d(x1, x2));
        const oracle::Terms t = oracle::terms(x1, x2, fitted);
        for (Eigen::Index k = 0; k < 9; ++k) {
          EXPECT_DOUBLE_EQ(f.upper(k), t.upper[static_cast<std::size_t>(k)]);
          EXPECT_DOUBLE_EQ(f.lower(k), t.lower[static_cast<std::size_t>(k)]);
          EXPECT_LE(f.lower(k), f.upper(k));
        }
      }
  }
}

TEST(Fire, ZeroGradeAbsorbs) {
  RuleBase rb = three_set_rulebase();
  const FiringIntervals f = fire(rb, BoundSource::Fitted, Eigen::Vector2d(50.0, 0.0));
  // Far from N and Z on input 1: the product underflows to exactly zero.
  for (Eigen::Index k = 0; k < 6; ++k) {
    EXPECT_EQ(f.upper(k), 0.0);
    EXPECT_EQ(f.lower(k), 0.0);
  }
}

TEST(Fire, DegenerateFootprintGivesPointIntervals) {
  const RuleBase rb = collapsed_three_set();
  const FiringIntervals f = fire(rb, BoundSource::Exact, Eigen::Vector2d(0.3, -0.6));
  EXPECT_TRUE((f.lower == f.upper).all());
}

TEST(Fire, DimensionMismatchThrows) {
  EXPECT_THROW(fire(three_set_rulebase(), BoundSource::Fitted, Eigen::Vector3d(0, 0, 0)), std::invalid_argument);
}

TEST(InferGc, OriginIsZero) {
  const RuleBase rb = three_set_rulebase();
  EXPECT_EQ(infer_gc(rb, kGcFitted, Eigen::Vector2d(0, 0)).value, 0.0);
  EXPECT_EQ(infer_gc(rb, kGcExact, Eigen::Vector2d(0, 0)).value, 0.0);
  EXPECT_FALSE(infer_gc(rb, kGcFitted, Eigen::Vector2d(0, 0)).degenerate);
}

TEST(InferGc, CornerMatchesTermByTerm) {
  const Inference r = infer_gc(three_set_rulebase(), kGcFitted, Eigen::Vector2d(-1, -1));
  EXPECT_GT(r.value, 0.9);
  EXPECT_LE(r.value, 1.0);
  EXPECT_NEAR(r.value, oracle::gc(-1, -1), 1e-12);
}

TEST(InferGc, GridMatchesTermByTerm) {
  const RuleBase rb = three_set_rulebase();
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double x1 = -1 + 0.1 * i;
      const double x2 = -1 + 0.1 * j;
      EXPECT_NEAR(infer_gc(rb, kGcFitted, Eigen::Vector2d(x1, x2)).value, oracle::gc(x1, x2, true), 1e-12);
      EXPECT_NEAR(infer_gc(rb, kGcExact, Eigen::Vector2d(x1, x2)).value, oracle::gc(x1, x2, false), 1e-12);
    }
}

TEST(InferGc, CollapsedFootprintFallsBack) {
  const RuleBase rb = collapsed_three_set();
  const Inference r = infer_gc(rb, kGcExact, Eigen::Vector2d(0.4, -0.2));
  EXPECT_TRUE(r.degenerate);
  EXPECT_NEAR(r.value, oracle::type1_center_average(0.4, -0.2, 0.418), 1e-12);
}

TEST(InferGc, NothingFiresGivesZero) {
  const Inference r = infer_gc(single_rule(0.5, 1.0, 0.5), kGcFitted, Eigen::VectorXd::Constant(1, 1e3));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.value, 0.0);
}

TEST(InferGcSplit, ReducesToSharedForm) {
  const RuleBase shared = three_set_rulebase();
  const RuleBase split = split_three_set(0.0);
  EngineConfig cfg = kGcFitted;
  cfg.form = Form::GcClosedSplit;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const Eigen::Vector2d x(-1 + 0.1 * i, -1 + 0.1 * j);
      EXPECT_NEAR(infer_gc_split(split, cfg, x).value, infer_gc(shared, kGcFitted, x).value, 1e-15);
    }
}

TEST(InferGcSplit, OffsetSingletonsAtOrigin) {
  const RuleBase rb = split_three_set(0.1);
  const FiringIntervals f = fire(rb, BoundSource::Fitted, Eigen::Vector2d(0, 0));
  double su = 0, sl = 0;
  for (Eigen::Index k = 0; k < 9; ++k) {
    su += f.upper(k);
    sl += f.lower(k);
  }
  const double expected = (0.1 * su + 0.1 * sl) / (su - sl);
  const double got = infer_gc_split(rb, kGcFitted, Eigen::Vector2d(0, 0)).value;
  EXPECT_NEAR(got, expected, 1e-12);
  EXPECT_NEAR(got, oracle::gc_split(0, 0, 0.1), 1e-12);
}

TEST(InferGcSplit, GridMatchesTermByTerm) {
  const RuleBase rb = split_three_set(0.1);
  for (double x1 = -1; x1 <= 1.001; x1 += 0.25)
    for (double x2 = -1; x2 <= 1.001; x2 += 0.25)
      EXPECT_NEAR(infer_gc_split(rb, kGcFitted, Eigen::Vector2d(x1, x2)).value, oracle::gc_split(x1, x2, 0.1), 1e-12);
}

TEST(InferGcSplit, SingleRuleEscapesHull) {
  RuleBase rb = single_rule(0.5, 0.8, 0.4);
  rb.rules[0].b_upper = 1.0;
  rb.rules[0].b_lower = 0.0;
  const Inference r = infer_gc_split(rb, kGcFitted, Eigen::VectorXd::Zero(1));
  EXPECT_NEAR(r.value, 2.0, 1e-15);
  EXPECT_FALSE(r.degenerate);
}

TEST(InferGcSplit, RequiresSplitConsequents) {
  EXPECT_THROW(infer_gc_split(three_set_rulebase(), kGcFitted, Eigen::Vector2d(0, 0)), std::invalid_argument);
}

TEST(InferNt, OriginIsZero) {
  EXPECT_EQ(infer_nt(three_set_rulebase(), kNtFitted, Eigen::Vector2d(0, 0)).value, 0.0);
}

TEST(InferNt, SingleRuleReturnsItsCenter) {
  const Inference r = infer_nt(single_rule(0.5, 0.6, 0.2), kNtFitted, Eigen::VectorXd::Zero(1));
  EXPECT_DOUBLE_EQ(r.value, 0.5);
}

TEST(InferNt, GridMatchesTermByTerm) {
  const RuleBase rb = three_set_rulebase();
  EXPECT_NEAR(infer_nt(rb, kNtFitted, Eigen::Vector2d(-1, -1)).value, oracle::nt(-1, -1), 1e-12);
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double x1 = -1 + 0.1 * i;
      const double x2 = -1 + 0.1 * j;
      EXPECT_NEAR(infer_nt(rb, kNtFitted, Eigen::Vector2d(x1, x2)).value, oracle::nt(x1, x2, true), 1e-12);
      EXPECT_NEAR(infer_nt(rb, kNtExact, Eigen::Vector2d(x1, x2)).value, oracle::nt(x1, x2, false), 1e-12);
    }
}

TEST(InferNt, NothingFiresIsFlagged) {
  const Inference r = infer_nt(single_rule(0.5, 1.0, 0.5), kNtFitted, Eigen::VectorXd::Constant(1, 1e3));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Properties, SkewSymmetry) {
  const RuleBase rb = three_set_rulebase();
  for (const auto& cfg : {kGcFitted, kGcExact, kNtFitted, kNtExact})
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const double x1 = -1 + 0.05 * i;
        const double x2 = -1 + 0.05 * j;
        const double a = infer(rb, cfg, Eigen::Vector2d(x1, x2)).value;
        const double b = infer(rb, cfg, Eigen::Vector2d(-x1, -x2)).value;
        ASSERT_NEAR(a, -b, 1e-12) << x1 << "," << x2;
      }
}

TEST(Properties, HullOnRandomRuleBases) {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    RuleBase rb = three_set_rulebase(PresetBounds::Published);
    for (auto& r : rb.rules) r.b = u(gen);
    const Eigen::ArrayXd b = rb.centers();
    for (int p = 0; p < 50; ++p) {
      const Eigen::Vector2d x(u(gen) / 2, u(gen) / 2);
      for (const auto& cfg : {kGcFitted, kGcExact, kNtFitted, kNtExact}) {
        const Inference r = infer(rb, cfg, x);
        if (r.degenerate) continue;
        EXPECT_GE(r.value, b.minCoeff() - 1e-12);
        EXPECT_LE(r.value, b.maxCoeff() + 1e-12);
      }
    }
  }
}

TEST(Properties, CollapseEquivalence) {
  const RuleBase rb = collapsed_three_set();
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int p = 0; p < 100; ++p) {
    const Eigen::Vector2d x(u(gen), u(gen));
    const double t1 = oracle::type1_center_average(x(0), x(1), 0.418);
    for (auto src : {BoundSource::Exact, BoundSource::Fitted}) {
      const Inference nt = infer_nt(rb, {Form::NtClosed, src, 1e-12}, x);
      const Inference gc = infer_gc(rb, {Form::GcClosed, src, 1e-12}, x);
      EXPECT_NEAR(nt.value, t1, 1e-12);
      EXPECT_NEAR(gc.value, t1, 1e-12);
      EXPECT_TRUE(gc.degenerate);
    }
  }
}

TEST(Properties, ContinuityOnGrid) {
  const RuleBase rb = three_set_rulebase();
  for (const auto& cfg : {kGcFitted, kNtFitted}) {
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j < 40; ++j) {
        const double a = -1 + 0.05 * i;
        const double b0 = -1 + 0.05 * j;
        const double b1 = b0 + 0.05;
        EXPECT_LT(std::abs(infer(rb, cfg, Eigen::Vector2d(a, b0)).value - infer(rb, cfg, Eigen::Vector2d(a, b1)).value), 0.2);
        EXPECT_LT(std::abs(infer(rb, cfg, Eigen::Vector2d(b0, a)).value - infer(rb, cfg, Eigen::Vector2d(b1, a)).value), 0.2);
      }
  }
}

TEST(Properties, ThreeInputProductForm) {
  // A three-input base reduces to the two-input preset when the third input sits on a singleton set.
  const RuleBase two = three_set_rulebase();
  RuleBase three = two;
  IT2Gaussian<double> only = make_uncertain_mean(0, 0, 1);
  only.fitted_umf = ScaledGaussian<double>{0, 1, 1};
  only.fitted_lmf = ScaledGaussian<double>{0, 1, 1};
  three.partitions.push_back(Partition{{-1, 1}, {only}, {}});
  for (auto& r : three.rules) r.antecedent.push_back(0);
  for (double x1 : {-0.8, 0.1, 0.6})
    for (double x2 : {-0.4, 0.9}) {
      EXPECT_NEAR(infer_gc(three, kGcFitted, Eigen::Vector3d(x1, x2, 0)).value,
                  infer_gc(two, kGcFitted, Eigen::Vector2d(x1, x2)).value, 1e-15);
    }
}
