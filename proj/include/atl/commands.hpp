#pragma once

#include <ostream>
#include <string>

#include "atl/config.hpp"

namespace atl::commands {

// exit codes: 0 ok, 1 usage, 2 config, 3 data, 4 acceptance failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitAcceptance = 4;

// closed-form A(KER, tau) maps and mean-asymmetry curves per parity, plus a
// plotting script; deterministic bytes for a given config
int cmd_model(const config::RunConfig& cfg, const std::string& out_dir);

// Monte Carlo run -> binary event file (and optional CSV mirror)
int cmd_simulate(const config::RunConfig& cfg, const std::string& out_dir,
                 bool write_csv);

// event file -> JES/asymmetry histograms, per-band delay scans, summary.json
int cmd_analyze(const config::RunConfig& cfg, const std::string& events_path,
                const std::string& out_dir);

// summary.json -> envelope/cosine/chirp fits; model-map CSV -> cosine fits
int cmd_fit(const config::RunConfig& cfg, const std::string& input_path,
            const std::string& out_dir);

// full acceptance suite; one line per criterion
int cmd_selfcheck(const config::RunConfig& cfg, std::ostream& report);

}  // namespace atl::commands
