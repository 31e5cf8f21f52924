#pragma once

// Runs the jumpcon executable through the shell and captures stdout.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace process {

struct Output {
    int exit_code = -1;
    std::string out;
};

inline std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

/// `args` is appended verbatim; stderr is discarded.
inline Output run(const std::string& exe, const std::string& args) {
    Output r;
    const std::string cmd = quote(exe) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace process
