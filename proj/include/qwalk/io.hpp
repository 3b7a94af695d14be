#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/analysis.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/walk_config.hpp"

namespace qwalk::io {

// Floating-point fields are serialized with 9 significant digits.
std::string format_sig9(double v);

std::string channel_token(const std::optional<ChannelKind>& channel);
ChannelKind parse_channel(const std::string& token);

// plus | minus | symmetric
CoinState parse_coin_init(const std::string& token);

// Header t,x,a,prob; one row per (x,a) cell, x ascending, a in (-1,+1).
std::string distribution_csv(const Distribution& dist);

// Header channel,T,p,mean,second_moment,sigma.
std::string moments_csv(const std::vector<analysis::MomentsRecord>& rows);

nlohmann::json distribution_json(const Distribution& dist);
nlohmann::json moments_json(const std::vector<analysis::MomentsRecord>& rows);

// Empty metadata block with the engine version filled in.
nlohmann::json make_metadata();

// Writes atomically enough for tests: content is fully built first.
// Throws IoError if the file cannot be opened.
void write_file(const std::string& path, const std::string& content);

}  // namespace qwalk::io
