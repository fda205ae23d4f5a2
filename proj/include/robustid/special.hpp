// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace robustid {

// Standard normal CDF, 0.5 * erfc(-t / sqrt 2) using the C library erfc.
double normal_cdf(double t);

// log(1 - Phi(t)) without cancellation. Uses erfc while the tail is well above
// the underflow range and a Lentz continued fraction for the Mills ratio
// beyond that, so the result stays finite for any finite t.
double log_normal_tail(double t);

// log Phi(t) = log_normal_tail(-t).
double log_normal_cdf(double t);

// Binary entropy in nats: beta log(1/beta) + (1 - beta) log(1/(1 - beta)),
// with the limits 0 at beta = 0 and beta = 1. DomainError outside [0, 1].
double entropy(double beta);

}  // namespace robustid
