#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "csvio.hpp"
#include "decomposition.hpp"
#include "presets.hpp"

namespace vlx {

const char* library_version();

/// Ids accepted by the figure command.
const std::vector<std::string>& figure_ids();

/// All series of one figure, fully computed.  Unknown id -> invalid_argument.
std::vector<SeriesDoc> figure_series(const std::string& figure_id);

/// Landau-basis weights as a document (columns n_prime, abs_a_sq, phase_rad).
SeriesDoc decompose_doc(const QuantumNumbers& qn, const FieldContext& ctx,
                        const FieldInitialConditions& ic,
                        double tail_tolerance, const std::string& name);

/// Scenario pipeline: waist -> drift -> boundary -> in-field series.
std::vector<SeriesDoc> scenario_series(const ScenarioConfig& cfg);

/// Shared writer.  CSV mode: one <name>.csv per document plus
/// <stem>_meta.json; JSON mode: a single <stem>.json carrying schema, rows
/// and metadata.  Returns the paths written, in write order.
std::vector<std::string> write_docs(const std::vector<SeriesDoc>& docs,
                                    const std::string& stem,
                                    const std::string& out_dir, bool as_json);

std::vector<std::string> write_figure(const std::string& figure_id,
                                      const std::string& out_dir,
                                      bool as_json);

std::vector<std::string> write_scenario(const ScenarioConfig& cfg,
                                        const std::string& out_dir,
                                        bool as_json);

}  // namespace vlx
