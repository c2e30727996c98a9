#include "shq/io.hh"

#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace shq {

std::string rat_str(const rat& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string real_str(const real& x)
{
    return x.str(0, std::ios_base::scientific);
}

nlohmann::json cplx_json(const cplx& z)
{
    return {{"re", real_str(z.real())}, {"im", real_str(z.imag())}};
}

namespace {

std::string timestamp_utc()
{
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

nlohmann::json header_json(const std::string& subcommand, const nlohmann::json& config)
{
    return {{"schema", 1},
            {"tool", "shq"},
            {"version", tool_version},
            {"subcommand", subcommand},
            {"config", config},
            {"timestamp", timestamp_utc()}};
}

std::string header_csv(const std::string& subcommand, const nlohmann::json& config)
{
    std::string h;
    h += "# schema: 1\n";
    h += "# tool: shq " + std::string(tool_version) + "\n";
    h += "# subcommand: " + subcommand + "\n";
    h += "# config: " + config.dump() + "\n";
    h += "# timestamp: " + timestamp_utc() + "\n";
    return h;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

} // namespace shq
