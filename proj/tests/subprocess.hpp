#pragma once

// Tiny popen wrapper for driving the CLI binary from tests.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline Result run(const std::string& command) {
    Result result;
    FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace subprocess
