#pragma once

#include "cce/gbdt.hpp"
#include "cce/simulate.hpp"

#include <span>
#include <string_view>

namespace cce {

struct AcceptanceOptions {
  bool include_empty = false;  // empty candidate lists as negatives
};

// Set-level vectors from critical samples; label 1 iff any candidate hits.
Dataset make_acceptance_dataset(std::span<const StoredFile> store,
                                const AcceptanceOptions& options = {});

// Candidate-level vectors from critical samples with at least one hit;
// target is the candidate length for hits and 0 otherwise.
Dataset make_ranking_dataset(std::span<const StoredFile> store);

// Fits every score dimension seen in critical samples.
Scaler fit_scaler(std::span<const StoredFile> store);

Dataset empty_dataset(const FeatureSchema& schema);

}  // namespace cce
