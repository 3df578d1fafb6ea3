#ifndef CAROUSEL_LOG_HPP
#define CAROUSEL_LOG_HPP

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace carousel {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

// Level comes from the CAROUSEL_LOG environment variable, read once.
inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("CAROUSEL_LOG");
        if (!env) return LogLevel::warn;
        std::string v(env);
        if (v == "error") return LogLevel::error;
        if (v == "warn") return LogLevel::warn;
        if (v == "info") return LogLevel::info;
        if (v == "debug") return LogLevel::debug;
        return LogLevel::warn;
    }();
    return level;
}

namespace detail {
inline std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}
inline void emit(const char* tag, const std::string& msg) {
    std::lock_guard<std::mutex> lock(log_mutex());
    std::cerr << "[carousel] " << tag << ": " << msg << '\n';
}
}  // namespace detail

inline void log_error(const std::string& msg) {
    if (log_level() >= LogLevel::error) detail::emit("error", msg);
}
inline void log_warn(const std::string& msg) {
    if (log_level() >= LogLevel::warn) detail::emit("warn", msg);
}
inline void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) detail::emit("info", msg);
}
inline void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) detail::emit("debug", msg);
}

}  // namespace carousel

#endif
