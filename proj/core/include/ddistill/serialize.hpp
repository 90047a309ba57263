#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace dd {

// Shortest decimal that round-trips a double exactly (%.17g).
std::string format_double(double v);

// Minimal JSON string escaping (quotes, backslash, control chars).
std::string json_escape(std::string_view s);

// Fixed-width little-endian binary I/O used by snapshot files.
void write_u32(std::FILE* f, std::uint32_t v);
void write_u64(std::FILE* f, std::uint64_t v);
void write_f64(std::FILE* f, double v);
void write_str(std::FILE* f, std::string_view s);  // u32 length + bytes
std::uint32_t read_u32(std::FILE* f);
std::uint64_t read_u64(std::FILE* f);
double read_f64(std::FILE* f);
std::string read_str(std::FILE* f);

}  // namespace dd
