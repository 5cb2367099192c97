#ifndef MEDAUG_CORPUS_FILES_H_
#define MEDAUG_CORPUS_FILES_H_

#include <cstddef>
#include <exception>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace medaug {

// Throws ParseError(kIo).
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partially written file. Creates parent directories.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Runs fn(0..n-1) on up to `jobs` threads. If any calls throw, the exception
// from the lowest index is rethrown after all workers finish, so the outcome
// does not depend on scheduling.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace medaug

#endif  // MEDAUG_CORPUS_FILES_H_
