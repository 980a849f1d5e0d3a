/*
   Copyright 2026 The zpair Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <zpair/report.hpp>

#include "support.hpp"

using namespace zpair;
using zpair::testing::fixture;

TEST(Report, Arrangement) {
    auto j = report::arrangement(fixture("sqrt5_a2.arr"));
    EXPECT_EQ(j["field"], "Q(sqrt 5)");
    EXPECT_EQ(j["dim"], 3);
    EXPECT_EQ(j["size"], 10);
    EXPECT_EQ(j["hyperplanes"][5], "1 0 2+1*rt");
}

TEST(Report, ResolutionIsDeterministic) {
    auto r = resolution(fixture("ziegler_a1.arr"));
    report::Options opt;
    auto j = report::resolution(r, opt);
    EXPECT_EQ(j["exp"], report::Json({1, 5, 6, 6, 6}));
    EXPECT_EQ(j["exp0"], report::Json({5, 6, 6, 6}));
    EXPECT_EQ(j["f1"], report::Json({7, 8}));
    EXPECT_FALSE(j.contains("timings_ms"));
    EXPECT_EQ(j.dump(), report::resolution(resolution(fixture("ziegler_a1.arr")), opt).dump());
    opt.timings = true;
    EXPECT_TRUE(report::resolution(r, opt).contains("timings_ms"));
}

TEST(Report, Lattice) {
    auto j = report::lattice(build_lattice(fixture("ziegler_a1.arr")));
    EXPECT_EQ(j["ranks"][2]["multiplicities"]["3"], 6);
    EXPECT_EQ(j["ranks"][1]["flats"], 9);
}

TEST(Report, Envelope) {
    auto j = report::envelope("exp");
    EXPECT_EQ(j["schema"], report::kSchema);
    EXPECT_EQ(j["command"], "exp");
    EXPECT_EQ(j.begin().key(), "schema");
}
