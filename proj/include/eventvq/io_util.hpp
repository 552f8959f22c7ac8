#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace eventvq {

// printf("%.*g") formatting; stable across runs for deterministic artifacts.
std::string format_double(double v, int precision = 12);

// YYYY-MM-DD in UTC.
std::string utc_date(std::int64_t timestamp);

std::string csv_escape(std::string_view field);

std::string read_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Write to <path>.tmp and rename into place, so readers never observe a
// truncated file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// flock-based advisory lock on <workdir>/.lock, released at destruction.
class WorkdirLock {
public:
    explicit WorkdirLock(const std::filesystem::path& workdir);
    ~WorkdirLock();
    WorkdirLock(const WorkdirLock&) = delete;
    WorkdirLock& operator=(const WorkdirLock&) = delete;

private:
    int fd_ = -1;
};

}  // namespace eventvq
