#include "mono/reports_json.hpp"

namespace mono {

using json = nlohmann::ordered_json;

json to_json(const GraphPoint& point) {
    json j;
    j["x"] = point.x;
    j["y"] = point.y;
    return j;
}

json to_json(const CheckReport& report) {
    json j;
    j["status"] = to_string(report.status);
    if (report.witness)
        j["witness"] = {report.witness->first, report.witness->second};
    if (report.margin) j["margin"] = *report.margin;
    if (report.min_margin) j["min_margin"] = *report.min_margin;
    j["pairs_checked"] = report.pairs_checked;
    j["tolerance"] = report.tolerance;
    if (report.subset_size) j["subset_size"] = *report.subset_size;
    if (report.center_index) j["center_index"] = *report.center_index;
    if (report.lambda) j["lambda"] = *report.lambda;
    if (report.theorem_violation) j["theorem_violation"] = true;
    if (!report.detail.empty()) j["detail"] = report.detail;
    return j;
}

json to_json(const ModulusEstimate& estimate) {
    json j;
    j["r_hat"] = estimate.r_hat;
    if (estimate.attaining_pair)
        j["attaining_pair"] = {estimate.attaining_pair->first,
                               estimate.attaining_pair->second};
    j["pairs_used"] = estimate.pairs_used;
    j["pairs_skipped"] = estimate.pairs_skipped;
    if (estimate.all_pairs_skipped) j["all_pairs_skipped"] = true;
    j["note"] = "lower bound on sampled graph";
    return j;
}

json to_json(const ProbeResult& result, std::span<const GraphPoint> probes) {
    json j;
    j["probe_count"] = result.candidates.size();
    j["addable_count"] = result.addable.size();
    json addable = json::array();
    for (std::size_t pi : result.addable) {
        json entry = to_json(probes[pi]);
        entry["probe_index"] = pi;
        addable.push_back(std::move(entry));
    }
    j["addable"] = std::move(addable);
    json margins = json::array();
    for (const ProbeCandidate& c : result.candidates) {
        json entry;
        entry["probe_index"] = c.probe_index;
        entry["min_margin"] = c.min_margin;
        entry["addable"] = c.addable;
        if (c.already_present) entry["already_present"] = true;
        margins.push_back(std::move(entry));
    }
    j["candidates"] = std::move(margins);
    j["tolerance"] = result.tolerance;
    if (result.window_size) j["window_size"] = *result.window_size;
    return j;
}

json cone_params_json(const ConeParams& params) {
    json j;
    j["locality_radius"] = params.locality_radius;
    j["slack"] = params.slack;
    j["directions"] = params.directions;
    j["min_neighbors"] = params.min_neighbors;
    return j;
}

json to_json(const DirectionSet& directions) {
    json j;
    j["at_index"] = directions.at_index;
    j["neighbor_count"] = directions.neighbor_count;
    j["vacuous"] = directions.vacuous;
    j["accepted_count"] = directions.directions.size();
    json dirs = json::array();
    for (const Vector& v : directions.directions) dirs.push_back(v);
    j["directions"] = std::move(dirs);
    j["params"] = cone_params_json(directions.params);
    return j;
}

json to_json(const PSDReport& report) {
    json j;
    j["outcome"] = to_string(report.outcome);
    if (report.violating_direction) {
        j["violating_z"] = report.violating_direction->first;
        j["violating_w"] = report.violating_direction->second;
    }
    if (report.value) j["value"] = *report.value;
    j["accepted_count"] = report.accepted_count;
    j["neighbor_count"] = report.neighbor_count;
    if (report.vacuous) j["vacuous"] = true;
    return j;
}

json to_json(const MaxMonoReport& report) {
    json j;
    j["status"] = to_string(report.status);
    j["modulus_r_hat"] = report.modulus_r_hat;
    j["points"] = report.points;
    j["violated_count"] = report.violated_count;
    j["inconclusive_count"] = report.inconclusive_count;
    if (report.first_violated_index) {
        j["first_violated_index"] = *report.first_violated_index;
        j["first_violation"] = to_json(*report.first_violation);
    }
    j["caveat_open_graph"] = report.caveat_open_graph;
    json addable = json::array();
    for (const GraphPoint& p : report.caveat_addable)
        addable.push_back(to_json(p));
    j["caveat_addable"] = std::move(addable);
    j["max_inconclusive_fraction"] = report.max_inconclusive_fraction;
    j["tolerance"] = report.tolerance;
    j["params"] = cone_params_json(report.params);
    return j;
}

json to_json(const ComponentClasses& classes) {
    json j;
    j["phi1"] = to_string(classes.phi1);
    j["phi2"] = to_string(classes.phi2);
    return j;
}

}  // namespace mono
