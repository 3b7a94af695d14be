#include "qwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/version.hpp"

namespace qwalk::io {

std::string format_sig9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string channel_token(const std::optional<ChannelKind>& channel) {
  if (!channel) return "none";
  switch (*channel) {
    case ChannelKind::CoinOnly:
      return "coin";
    case ChannelKind::PositionOnly:
      return "position";
    case ChannelKind::Both:
      return "both";
  }
  return "none";
}

ChannelKind parse_channel(const std::string& token) {
  if (token == "coin") return ChannelKind::CoinOnly;
  if (token == "position") return ChannelKind::PositionOnly;
  if (token == "both") return ChannelKind::Both;
  throw std::invalid_argument("unknown channel '" + token +
                              "' (expected coin|position|both)");
}

CoinState parse_coin_init(const std::string& token) {
  if (token == "plus") return coin_state(CoinLabel::plus);
  if (token == "minus") return coin_state(CoinLabel::minus);
  if (token == "symmetric") return symmetric_coin_state();
  throw std::invalid_argument("unknown coin init '" + token +
                              "' (expected plus|minus|symmetric)");
}

std::string distribution_csv(const Distribution& dist) {
  std::string out = "t,x,a,prob\n";
  for (int x = -dist.horizon; x <= dist.horizon; ++x) {
    for (int c = 0; c < 2; ++c) {
      out += std::to_string(dist.time);
      out += ',';
      out += std::to_string(x);
      out += ',';
      out += std::to_string(2 * c - 1);
      out += ',';
      out += format_sig9(dist.probs(dist.index(x, c)));
      out += '\n';
    }
  }
  return out;
}

std::string moments_csv(const std::vector<analysis::MomentsRecord>& rows) {
  std::string out = "channel,T,p,mean,second_moment,sigma\n";
  for (const auto& r : rows) {
    out += channel_token(r.channel);
    out += ',';
    out += std::to_string(r.T);
    out += ',';
    out += format_sig9(r.p);
    out += ',';
    out += format_sig9(r.mean);
    out += ',';
    out += format_sig9(r.second_moment);
    out += ',';
    out += format_sig9(r.sigma);
    out += '\n';
  }
  return out;
}

nlohmann::json distribution_json(const Distribution& dist) {
  nlohmann::json rows = nlohmann::json::array();
  for (int x = -dist.horizon; x <= dist.horizon; ++x) {
    for (int c = 0; c < 2; ++c) {
      rows.push_back({{"t", dist.time},
                      {"x", x},
                      {"a", 2 * c - 1},
                      {"prob", dist.probs(dist.index(x, c))}});
    }
  }
  return rows;
}

nlohmann::json moments_json(const std::vector<analysis::MomentsRecord>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"channel", channel_token(r.channel)},
                   {"T", r.T},
                   {"p", r.p},
                   {"mean", r.mean},
                   {"second_moment", r.second_moment},
                   {"sigma", r.sigma}});
  }
  return out;
}

nlohmann::json make_metadata() {
  return nlohmann::json{{"engine", "qwalk"}, {"version", kVersion}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace qwalk::io
