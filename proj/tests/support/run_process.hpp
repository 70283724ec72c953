#pragma once

// Minimal process runner for driving the CLI binary from tests.

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct RunResult {
    int status = -1;    // exit code, -1 if the process died abnormally
    std::string output; // captured stdout (plus stderr if redirected)
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

inline RunResult run_shell(const std::string& command) {
    RunResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.output.append(buf, n);
    int rc = pclose(pipe);
    if (WIFEXITED(rc))
        r.status = WEXITSTATUS(rc);
    return r;
}

} // namespace testsupport
