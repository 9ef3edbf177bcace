#include "tle/certificate.hpp"

namespace tle {

std::string to_string(Status s)
{
    switch (s) {
    case Status::verified:
        return "verified";
    case Status::falsified:
        return "falsified";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "?";
}

Status worst(Status a, Status b)
{
    auto rank = [](Status s) { return s == Status::verified ? 0 : (s == Status::inconclusive ? 1 : 2); };
    return rank(a) >= rank(b) ? a : b;
}

Status worst_status(const std::vector<Certificate>& certs)
{
    Status s = Status::verified;
    for (const auto& c : certs)
        s = worst(s, c.status);
    return s;
}

nlohmann::ordered_json Certificate::to_json() const
{
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    j["statement"] = statement;
    j["status"] = to_string(status);
    if (witness) {
        if (const auto* r = std::get_if<Rational>(&*witness))
            j["witness"] = {{"point", r->str()}};
        else {
            const auto& iv = std::get<Interval>(*witness);
            j["witness"] = {{"lo", iv.lo().str()}, {"hi", iv.hi().str()}};
        }
    } else {
        j["witness"] = nullptr;
    }
    j["precision_bits"] = precision_bits;
    j["anchor"] = anchor;
    j["details"] = details;
    return j;
}

}  // namespace tle
