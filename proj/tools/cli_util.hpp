#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsurf/codes.hpp"
#include "qsurf/decoders.hpp"
#include "qsurf/version.hpp"

namespace qcli {

// every output carries the tool version and the exact invocation
inline std::string g_command_line;

inline std::string provenance_comment() {
    return "# qsurf " + std::string(qsurf::kVersion) + "\n# cmd: " + g_command_line + "\n";
}

inline void capture_command(int argc, char** argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) {
        if (i) out << ' ';
        out << argv[i];
    }
    g_command_line = out.str();
}

inline nlohmann::json provenance_json() {
    return {{"tool", "qsurf"}, {"version", qsurf::kVersion}, {"command", g_command_line}};
}

// inject the provenance object into a serialized JSON document
inline std::string with_provenance(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    j["provenance"] = provenance_json();
    return j.dump(2) + "\n";
}

inline qsurf::SurfaceCode make_code(const std::string& spec, bool xzzx) {
    int dx = 0, dz = 0;
    char sep = 0;
    std::istringstream in(spec);
    if (!(in >> dx)) throw std::invalid_argument("bad code spec: " + spec);
    if (in >> sep) {
        if (sep != ',' || !(in >> dz)) throw std::invalid_argument("bad code spec: " + spec);
    } else {
        dz = dx;
    }
    return xzzx ? qsurf::build_xzzx_code(dx, dz) : qsurf::build_surface_code(dx, dz);
}

inline double parse_bias(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return std::numeric_limits<double>::infinity();
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad bias: " + text);
    return v;
}

inline qsurf::Decoder parse_decoder(const std::string& name) {
    if (name == "mwpm") return qsurf::Decoder::mwpm;
    if (name == "ml") return qsurf::Decoder::ml;
    throw std::invalid_argument("unknown decoder: " + name);
}

// write to the path, or stdout when empty
inline void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

inline std::string bias_label(double bias) {
    if (std::isinf(bias)) return "inf";
    std::ostringstream out;
    out << bias;
    return out.str();
}

}  // namespace qcli
