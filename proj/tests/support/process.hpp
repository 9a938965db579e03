#pragma once

// Minimal subprocess capture for driving the CLI binary from tests.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char ch : s) {
        if (ch == '\'')
            quoted += "'\\''";
        else
            quoted += ch;
    }
    quoted += "'";
    return quoted;
}

inline std::string read_and_remove(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    std::remove(path.c_str());
    return buf.str();
}

inline CommandResult run_command(const std::string& shell_command) {
    static int counter = 0;
    const std::string tag = std::to_string(::getpid()) + "." +
                            std::to_string(counter++);
    const std::string out_path = "/tmp/coprime_test_out." + tag;
    const std::string err_path = "/tmp/coprime_test_err." + tag;
    const std::string full =
        shell_command + " >" + out_path + " 2>" + err_path;
    const int status = std::system(full.c_str());
    CommandResult result;
    if (status != -1 && WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    result.out = read_and_remove(out_path);
    result.err = read_and_remove(err_path);
    return result;
}

} // namespace testsupport
