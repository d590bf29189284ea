#pragma once

#include "graphoid/bayesnet.hpp"
#include "graphoid/distribution.hpp"
#include "graphoid/model.hpp"
#include "graphoid/simnet.hpp"

namespace graphoid::fixtures {

// Two fair coins x, y and z recording both outcomes. x and y are mutually
// irrelevant yet coupled through z.
JointTable xor_table();

// The five-node alarm network u1..u5: u1->u2, u1->u3, u2->u4, u3->u4, u4->u5.
Dag figure1_dag();

// Burglary, two sensors, alarm and patrol, given by three independence
// statements; its closure yields the alarm network.
DependencyModel burglary_model();

// Hypothesis h with five values and findings u1..u5 shaped so that:
//   {h1,h2,h3} are told apart by u1, u2, u3, u5
//   {h3,h4}    by u3, u4, u5
//   {h4,h5}    by u1 alone
JointTable figure2_table();
HypothesisCover figure2_cover();

}  // namespace graphoid::fixtures
