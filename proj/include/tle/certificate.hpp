#pragma once

#include "tle/interval.hpp"
#include "tle/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tle {

enum class Status { verified, falsified, inconclusive };

std::string to_string(Status s);
// verified < inconclusive < falsified
Status worst(Status a, Status b);

struct Certificate {
    std::string claim_id;
    std::string statement;
    Status status = Status::verified;
    std::optional<std::variant<Rational, Interval>> witness;
    unsigned precision_bits = 0;
    std::string anchor;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool verified() const { return status == Status::verified; }
    nlohmann::ordered_json to_json() const;
};

Status worst_status(const std::vector<Certificate>& certs);

}  // namespace tle
