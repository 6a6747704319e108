// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lagmap/homology.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "lagmap/error.hpp"
#include "lagmap/map_io.hpp"
#include "lagmap/topology.hpp"
#include "oracles.hpp"

namespace lagmap {
namespace {

using testing::Corpus;
using testing::Fixture;

Field FieldFor(const CombinatorialMap& m) {
  return m.mode() == Mode::kSigned ? Field::kGf2 : Field::kRationals;
}

std::vector<int> Columns(const CutSet& s, int n) {
  std::vector<int> cols;
  for (Element e : s.elements()) cols.push_back(e.starred ? n + e.index - 1 : e.index - 1);
  return cols;
}

TEST(SpineTest, Counts) {
  const auto sphere = BuildSpine(Fixture("SPHERE_EDGE"));
  EXPECT_EQ(sphere.num_flags, 4);
  EXPECT_EQ(sphere.arcs.size(), 6u);
  EXPECT_EQ(sphere.cycle_rank(), 3);
  const auto torus = BuildSpine(Fixture("TORUS_AB"));
  EXPECT_EQ(torus.num_flags, 8);
  EXPECT_EQ(torus.arcs.size(), 12u);
  EXPECT_EQ(torus.cycle_rank(), 5);
}

TEST(SpineTest, ArcSignsOnCorpus) {
  for (const auto& [name, m] : Corpus()) {
    const auto spine = BuildSpine(m);
    EXPECT_EQ(spine.cycle_rank(), 2 * m.num_edges() + 1) << name;
    for (const auto& arc : spine.arcs) {
      if (arc.side == Side::kDiagonal) {
        EXPECT_EQ(arc.sign, 0);
        EXPECT_EQ(arc.edge, 0);
      } else {
        EXPECT_TRUE(arc.sign == 1 || arc.sign == -1);
        EXPECT_EQ(arc.edge, arc.from.edge());
      }
    }
  }
}

TEST(CycleBasisTest, SizesAndClosure) {
  EXPECT_EQ(CycleBasis(BuildSpine(Fixture("SPHERE_EDGE"))).size(), 3u);
  EXPECT_EQ(CycleBasis(BuildSpine(Fixture("TORUS_AB"))).size(), 5u);
  for (const auto& [name, m] : Corpus()) {
    const auto spine = BuildSpine(m);
    const auto cycles = CycleBasis(spine);
    EXPECT_EQ(static_cast<int>(cycles.size()), spine.cycle_rank()) << name;
    for (const auto& c : cycles) EXPECT_TRUE(IsClosedWalk(spine, c)) << name;
  }
}

TEST(IncidenceTest, LinkCycles) {
  const auto m = Fixture("SPHERE_EDGE");
  const auto spine = BuildSpine(m);
  EXPECT_TRUE(Incidence(spine, CrossingLink(m, spine, 1)).is_zero());
  const IncidenceVector v = Incidence(spine, VertexLink(m, spine, 0));
  EXPECT_EQ(mpz_class(abs(v[(Element{1, false})])), 1);
  EXPECT_EQ(v[(Element{1, true})], 0);
  EXPECT_TRUE(Incidence(spine, Cycle{Flag{0}, {}}).is_zero());
}

TEST(IncidenceTest, CrossingLinksVanishOnCorpus) {
  for (const auto& [name, m] : Corpus()) {
    const auto spine = BuildSpine(m);
    for (int e = 1; e <= m.num_edges(); ++e) {
      const Cycle link = CrossingLink(m, spine, e);
      EXPECT_TRUE(IsClosedWalk(spine, link));
      const IncidenceVector iota = Incidence(spine, link);
      for (const auto& x : iota.coords()) {
        if (m.mode() == Mode::kSigned) {
          EXPECT_TRUE(mpz_even_p(x.get_mpz_t())) << name << " edge " << e;
        } else {
          EXPECT_EQ(x, 0) << name << " edge " << e;
        }
      }
    }
  }
}

TEST(PairProductTest, Definition) {
  IncidenceVector e(1, {1, 0});
  IncidenceVector e_star(1, {0, 1});
  EXPECT_EQ(PairProduct(e, e_star), 1);
  EXPECT_EQ(PairProduct(e_star, e), 1);
  EXPECT_EQ(PairProduct(e, e), 0);
  EXPECT_EQ(PairProduct(IncidenceVector(1, {1, 1}), IncidenceVector(1, {1, 1})), 2);
  EXPECT_EQ(PairProduct(IncidenceVector(2, {1, 1, 0, 0}), IncidenceVector(2, {0, 0, 1, -1})), 0);
  EXPECT_EQ(PairProduct(e, e_star, Field::kGf2), 1);
  EXPECT_EQ(PairProduct(IncidenceVector(1, {1, 1}), IncidenceVector(1, {1, 3}), Field::kGf2), 0);
}

TEST(IsotropyTest, CycleBasisOnCorpus) {
  for (const auto& [name, m] : Corpus()) {
    const auto spine = BuildSpine(m);
    const Field field = FieldFor(m);
    std::vector<IncidenceVector> vectors;
    for (const auto& c : CycleBasis(spine)) vectors.push_back(Incidence(spine, c));
    for (const auto& u : vectors) {
      for (const auto& v : vectors) EXPECT_EQ(PairProduct(u, v, field), 0) << name;
    }
  }
}

TEST(IsotropyTest, LinkCyclesPairToZeroWithEverything) {
  for (const auto& [name, m] : Corpus()) {
    const auto spine = BuildSpine(m);
    const Field field = FieldFor(m);
    std::vector<IncidenceVector> links;
    for (int v = 0; v < m.num_vertices(); ++v) links.push_back(Incidence(spine, VertexLink(m, spine, v)));
    for (int f = 0; f < m.num_faces(); ++f) links.push_back(Incidence(spine, FaceLink(m, spine, f)));
    for (const auto& c : CycleBasis(spine)) {
      const IncidenceVector iota = Incidence(spine, c);
      for (const auto& link : links) EXPECT_EQ(PairProduct(link, iota, field), 0) << name;
    }
  }
}

TEST(RepresentationTest, SphereEdge) {
  const Representation rep = BuildRepresentation(Fixture("SPHERE_EDGE"), Field::kRationals);
  EXPECT_TRUE(RowSpaceEqual(rep.matrix(), ExactMatrix::FromIntegers({{1, 0}})));
}

TEST(RepresentationTest, TorusGolden) {
  const Representation rep = BuildRepresentation(Fixture("TORUS_AB"), Field::kRationals);
  const ExactMatrix a = ExactMatrix::FromIntegers({{0, 1}, {-1, 0}});
  EXPECT_TRUE(RowSpaceEqual(rep.matrix(), HorizontalConcat(a, ExactMatrix::Identity(2))));
  EXPECT_EQ(rep.matrix(), ExactMatrix::FromIntegers({{1, 0, 0, -1}, {0, 1, 1, 0}}));
  EXPECT_EQ(Rank(rep.matrix()), 2);
  EXPECT_TRUE(ColumnsIndependent(rep.matrix(), std::vector<int>{0, 1}));
  EXPECT_FALSE(ColumnsIndependent(rep.matrix(), std::vector<int>{0, 3}));
  EXPECT_TRUE(IsSkewSymmetric(rep.a * rep.b.transpose()));
}

TEST(RepresentationTest, ProjectivePlaneOverGf2) {
  const auto m = Fixture("RP2_LOOP");
  const Representation rep = BuildRepresentation(m, Field::kGf2);
  EXPECT_EQ(rep.matrix(), ExactMatrix::FromIntegers({{1, 1}}, Field::kGf2));
  EXPECT_EQ(MatroidFromRepresentation(rep), EnumerateBases(m));
  EXPECT_THROW(BuildRepresentation(m, Field::kRationals), InvalidArgument);
}

// One vertex and one face: each loop's class pairs with the others through
// the rotation interleaving and with its own coedge as 1.
TEST(RepresentationTest, OneVertexOneFaceMatchesInterleavingOracle) {
  int checked = 0;
  for (const auto& [name, m] : Corpus()) {
    if (m.mode() != Mode::kOrientable || m.num_vertices() != 1 || m.num_faces() != 1) continue;
    const int n = m.num_edges();
    ExactMatrix expected(n, 2 * n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) expected.set(i - 1, j - 1, testing::LoopIntersection(m, i, j));
      expected.set(i - 1, n + i - 1, 1);
    }
    EXPECT_TRUE(RowSpaceEqual(BuildRepresentation(m, Field::kRationals).matrix(), expected))
        << name << "\n" << WriteMap(m);
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

TEST(RepresentationTest, LagrangianDimensionAndSkewOnCorpus) {
  for (const auto& [name, m] : Corpus()) {
    const Representation rep = BuildRepresentation(m, FieldFor(m));
    EXPECT_EQ(rep.n(), m.num_edges()) << name;
    EXPECT_EQ(Rank(rep.matrix()), m.num_edges()) << name;
    if (rep.field == Field::kRationals) {
      EXPECT_TRUE(IsSkewSymmetric(rep.a * rep.b.transpose())) << name;
    }
  }
  // Over GF(2) the symmetric form is also skew but need not be alternating.
  const Representation rp2 = BuildRepresentation(Fixture("RP2_LOOP"), Field::kGf2);
  EXPECT_FALSE(IsSkewSymmetric(rp2.a * rp2.b.transpose()));
}

TEST(RepresentationTest, ColumnsMatchTopologicalIndependence) {
  for (const auto& [name, m] : Corpus()) {
    const Representation rep = BuildRepresentation(m, FieldFor(m));
    const ExactMatrix matrix = rep.matrix();
    for (const CutSet& s : GroundSet(m.num_edges()).AdmissibleSubsets()) {
      const bool topological = IsIndependent(m, s);
      EXPECT_EQ(IndependentInRepresentation(rep, s), topological) << name << " {" << s.to_string() << "}";
      EXPECT_EQ(ColumnsIndependent(matrix, Columns(s, m.num_edges())), topological);
    }
  }
}

TEST(RepresentationTest, FieldsAgreeOnOrientableCorpus) {
  for (const auto& [name, m] : Corpus()) {
    if (m.mode() != Mode::kOrientable) continue;
    const BasisFamily q = MatroidFromRepresentation(BuildRepresentation(m, Field::kRationals));
    const BasisFamily f2 = MatroidFromRepresentation(BuildRepresentation(m, Field::kGf2));
    EXPECT_EQ(q, f2) << name;
    EXPECT_EQ(q, EnumerateBases(m)) << name;
  }
}

TEST(RepresentationTest, Gf2AgreesOnSignedVariants) {
  for (const auto& m : testing::SignedVariants(3)) {
    const Representation rep = BuildRepresentation(m, Field::kGf2);
    EXPECT_EQ(Rank(rep.matrix()), m.num_edges());
    EXPECT_EQ(MatroidFromRepresentation(rep), EnumerateBases(m)) << WriteMap(m);
  }
}

TEST(RepresentationTest, InvariantUnderCycleOrder) {
  std::mt19937 rng(4);
  for (const auto& [name, m] : Corpus()) {
    const Field field = FieldFor(m);
    const auto spine = BuildSpine(m);
    auto cycles = CycleBasis(spine);
    const ExactMatrix reference = RepresentationFromCycles(spine, cycles, field).matrix();
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(cycles.begin(), cycles.end(), rng);
      EXPECT_TRUE(RowSpaceEqual(RepresentationFromCycles(spine, cycles, field).matrix(), reference))
          << name;
    }
  }
}

TEST(RepresentationTest, ReversingAnEdgeKeepsTheBasisFamily) {
  for (const auto& [name, m] : Corpus(3)) {
    if (m.mode() != Mode::kOrientable) continue;
    auto rotation = m.rotation();
    for (auto& cycle : rotation) {
      for (Dart& d : cycle) {
        if (d.edge() == 1) d = d.opposite();
      }
    }
    const CombinatorialMap reversed(Mode::kOrientable, m.num_edges(), rotation);
    EXPECT_EQ(MatroidFromRepresentation(BuildRepresentation(reversed, Field::kRationals)),
              MatroidFromRepresentation(BuildRepresentation(m, Field::kRationals)))
        << name;
  }
}

TEST(RepresentationTest, RejectsDegenerateCycleSets) {
  const auto m = Fixture("TORUS_AB");
  const auto spine = BuildSpine(m);
  EXPECT_THROW(RepresentationFromCycles(spine, {}, Field::kRationals), PropertyViolation);
}

}  // namespace
}  // namespace lagmap
