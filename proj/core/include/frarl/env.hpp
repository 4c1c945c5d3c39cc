#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frarl/fra.hpp"
#include "frarl/qlearn.hpp"

namespace frarl {

/// Geometry of a slip-perturbed grid world. Cells are indexed row-major.
struct GridSpec {
    int width = 0;
    int height = 0;
    int initial_row = 0;
    int initial_col = 0;
    double slip = 0.0;                                // per perpendicular neighbor
    std::vector<std::pair<int, char>> landmarks;      // cell id -> proposition
    std::set<std::pair<int, int>> walls;              // blocked edges, canonical order

    int cells() const { return width * height; }
    int cell(int row, int col) const { return row * width + col; }
    void validate() const;  // throws std::invalid_argument naming the field
};

/// Parses and validates the JSON grid-config document.
GridSpec load_grid_config(const std::string& json_text);

/// Bundled default maps (same schema as load_grid_config input).
const std::string& office_default_json();
const std::string& craft_default_json();

// Actions, fixed order.
inline constexpr int kActionNorth = 0;
inline constexpr int kActionSouth = 1;
inline constexpr int kActionEast = 2;
inline constexpr int kActionWest = 3;

/// Grid-world MDP whose reward function is realized by a concealed task
/// automaton driven by the emitted labels. The observable state is the cell.
class GridWorld : public Environment {
public:
    GridWorld(GridSpec spec, Fra task_fra);

    int reset() override;
    StepOutcome step(int action, Rng& rng) override;
    int num_states() const override { return spec_.cells(); }
    int num_actions() const override { return 4; }

    const GridSpec& spec() const { return spec_; }
    Label cell_label(int cell) const;
    int initial_cell() const { return spec_.cell(spec_.initial_row, spec_.initial_col); }

    /// Analytic transition model: (destination cell, probability) pairs,
    /// aggregated, summing to 1. For oracles and tests.
    std::vector<std::pair<int, double>> transitions(int cell, int action) const;

    /// The concealed task automaton. Oracle/test use only; the learning agent
    /// must not read this.
    const Fra& task_fra() const { return task_fra_; }

private:
    int move(int cell, int dir) const;

    GridSpec spec_;
    Fra task_fra_;
    std::vector<char> landmark_of_;  // 0 = unlabeled
    int cur_cell_ = 0;
    int task_state_ = 0;
};

/// Sequence-completion task automaton over the given label universe:
/// advance on each expected label, self-loop with 0 otherwise. Non-cyclic
/// tasks pay 1 on the final advance and then absorb; cyclic tasks pay 1 on
/// each cycle completion and return to the start state.
Fra make_sequence_fra(const std::vector<Label>& universe, const std::vector<Label>& sequence,
                      bool cyclic);

/// Office-world tasks 1-3 on the default 9x12 map (or an override).
GridWorld make_office_world(int task_id, std::optional<GridSpec> spec_override = {});

/// Minecraft-world tasks 1-2 on the default 21x21 map (or an override).
GridWorld make_craft_world(int task_id, std::optional<GridSpec> spec_override = {});

/// Single-row corridor micro-environment used by tests: deterministic
/// movement, landmark 'a' on the rightmost cell, reward 1 the first time 'a'
/// is reached.
GridWorld make_corridor_world(int length = 2);

}  // namespace frarl
