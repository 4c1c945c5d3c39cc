#include "frarl/env.hpp"

#include <json.hpp>

#include <map>

namespace frarl {

using nlohmann::json;

void GridSpec::validate() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("grid: width/height must be positive");
    if (initial_row < 0 || initial_row >= height || initial_col < 0 || initial_col >= width)
        throw std::invalid_argument("grid: initial cell out of bounds");
    if (!(slip >= 0.0 && slip < 0.5)) throw std::invalid_argument("grid: slip must be in [0, 0.5)");
    for (const auto& [c, prop] : landmarks) {
        if (c < 0 || c >= cells())
            throw std::invalid_argument("grid: landmark cell out of bounds");
        if (prop < 'a' || prop > 'z')
            throw std::invalid_argument("grid: landmark proposition must be a lowercase letter");
    }
    for (const auto& [a, b] : walls) {
        if (a < 0 || a >= cells() || b < 0 || b >= cells())
            throw std::invalid_argument("grid: wall cell out of bounds");
        int ra = a / width, ca = a % width, rb = b / width, cb = b % width;
        if (std::abs(ra - rb) + std::abs(ca - cb) != 1)
            throw std::invalid_argument("grid: wall must join adjacent cells");
    }
}

GridSpec load_grid_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("grid config: ") + e.what());
    }
    GridSpec spec;
    try {
        spec.width = doc.at("width").get<int>();
        spec.height = doc.at("height").get<int>();
        spec.initial_row = doc.at("initial").at(0).get<int>();
        spec.initial_col = doc.at("initial").at(1).get<int>();
        spec.slip = doc.at("slip").get<double>();
        for (const auto& lm : doc.at("landmarks")) {
            int row = lm.at("cell").at(0).get<int>();
            int col = lm.at("cell").at(1).get<int>();
            std::string prop = lm.at("prop").get<std::string>();
            if (prop.size() != 1)
                throw std::invalid_argument("grid config: landmark prop must be one character");
            if (row < 0 || row >= spec.height || col < 0 || col >= spec.width)
                throw std::invalid_argument("grid config: landmark cell out of bounds");
            spec.landmarks.emplace_back(spec.cell(row, col), prop[0]);
        }
        if (doc.contains("walls")) {
            for (const auto& wall : doc.at("walls")) {
                int a = spec.cell(wall.at(0).at(0).get<int>(), wall.at(0).at(1).get<int>());
                int b = spec.cell(wall.at(1).at(0).get<int>(), wall.at(1).at(1).get<int>());
                spec.walls.insert({std::min(a, b), std::max(a, b)});
            }
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("grid config: ") + e.what());
    }
    spec.validate();
    return spec;
}

GridWorld::GridWorld(GridSpec spec, Fra task_fra)
    : spec_(std::move(spec)), task_fra_(std::move(task_fra)) {
    spec_.validate();
    landmark_of_.assign(spec_.cells(), 0);
    for (const auto& [c, prop] : spec_.landmarks) landmark_of_[c] = prop;
    reset();
}

Label GridWorld::cell_label(int cell) const {
    char prop = landmark_of_[cell];
    return prop ? Label(std::string(1, prop)) : Label();
}

int GridWorld::move(int cell, int dir) const {
    static constexpr int dr[] = {-1, 1, 0, 0};
    static constexpr int dc[] = {0, 0, 1, -1};
    int row = cell / spec_.width, col = cell % spec_.width;
    int nr = row + dr[dir], nc = col + dc[dir];
    if (nr < 0 || nr >= spec_.height || nc < 0 || nc >= spec_.width) return cell;
    int next = spec_.cell(nr, nc);
    if (spec_.walls.count({std::min(cell, next), std::max(cell, next)})) return cell;
    return next;
}

int GridWorld::reset() {
    cur_cell_ = initial_cell();
    task_state_ = task_fra_.initial();
    return cur_cell_;
}

StepOutcome GridWorld::step(int action, Rng& rng) {
    if (action < 0 || action >= 4) throw std::invalid_argument("bad action");
    // Perpendicular slip directions.
    static constexpr int perp[4][2] = {{kActionEast, kActionWest},
                                       {kActionEast, kActionWest},
                                       {kActionNorth, kActionSouth},
                                       {kActionNorth, kActionSouth}};
    int dir = action;
    if (spec_.slip > 0.0) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        double u = coin(rng);
        if (u < spec_.slip)
            dir = perp[action][0];
        else if (u < 2.0 * spec_.slip)
            dir = perp[action][1];
    }
    int next = move(cur_cell_, dir);
    Label label = cell_label(next);
    auto [task_next, reward] = task_fra_.step_total(task_state_, label);
    cur_cell_ = next;
    task_state_ = task_next;
    return {next, label, reward};
}

std::vector<std::pair<int, double>> GridWorld::transitions(int cell, int action) const {
    static constexpr int perp[4][2] = {{kActionEast, kActionWest},
                                       {kActionEast, kActionWest},
                                       {kActionNorth, kActionSouth},
                                       {kActionNorth, kActionSouth}};
    std::map<int, double> probs;
    probs[move(cell, action)] += 1.0 - 2.0 * spec_.slip;
    if (spec_.slip > 0.0) {
        probs[move(cell, perp[action][0])] += spec_.slip;
        probs[move(cell, perp[action][1])] += spec_.slip;
    }
    return {probs.begin(), probs.end()};
}

Fra make_sequence_fra(const std::vector<Label>& universe, const std::vector<Label>& sequence,
                      bool cyclic) {
    if (sequence.empty()) throw std::invalid_argument("task sequence must be nonempty");
    int k = static_cast<int>(sequence.size());
    int num_states = cyclic ? k : k + 1;
    Fra a(universe, {kRewardZero, kRewardOne}, num_states, 0);
    for (int i = 0; i < k; ++i) {
        bool last = i == k - 1;
        int next = last ? (cyclic ? 0 : k) : i + 1;
        a.set_transition(i, sequence[i], next, last ? kRewardOne : kRewardZero);
    }
    return a;
}

namespace {

std::vector<Label> label_universe(const std::string& props) {
    std::vector<Label> universe{Label()};
    for (char p : props) universe.push_back(Label(std::string(1, p)));
    return universe;
}

std::vector<Label> label_seq(const std::string& props) {
    std::vector<Label> seq;
    for (char p : props) seq.push_back(Label(std::string(1, p)));
    return seq;
}

}  // namespace

GridWorld make_office_world(int task_id, std::optional<GridSpec> spec_override) {
    GridSpec spec =
        spec_override ? std::move(*spec_override) : load_grid_config(office_default_json());
    auto universe = label_universe("abc");
    Fra task = [&] {
        switch (task_id) {
            case 1: return make_sequence_fra(universe, label_seq("abac"), false);
            case 2: return make_sequence_fra(universe, label_seq("bca"), true);
            case 3: return make_sequence_fra(universe, label_seq("cbabca"), false);
            default: throw std::invalid_argument("office task id must be 1, 2 or 3");
        }
    }();
    return GridWorld(std::move(spec), std::move(task));
}

GridWorld make_craft_world(int task_id, std::optional<GridSpec> spec_override) {
    GridSpec spec =
        spec_override ? std::move(*spec_override) : load_grid_config(craft_default_json());
    auto universe = label_universe("abcef");
    Fra task = [&] {
        switch (task_id) {
            case 1: return make_sequence_fra(universe, label_seq("befec"), false);
            case 2: return make_sequence_fra(universe, label_seq("beabc"), false);
            default: throw std::invalid_argument("craft task id must be 1 or 2");
        }
    }();
    return GridWorld(std::move(spec), std::move(task));
}

GridWorld make_corridor_world(int length) {
    GridSpec spec;
    spec.width = length;
    spec.height = 1;
    spec.initial_row = 0;
    spec.initial_col = 0;
    spec.slip = 0.0;
    spec.landmarks.emplace_back(length - 1, 'a');
    Fra task = make_sequence_fra(label_universe("a"), label_seq("a"), false);
    return GridWorld(std::move(spec), std::move(task));
}

}  // namespace frarl
