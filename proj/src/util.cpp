#include "clusterbench/util.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace clusterbench {

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buffer, ptr);
}

namespace {

std::size_t parse_count(const std::string& token) {
    std::size_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value == 0)
        throw std::invalid_argument("cluster list: '" + token + "' is not a positive integer");
    return value;
}

}  // namespace

std::vector<std::size_t> parse_cluster_list(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("cluster list: empty");

    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = parse_count(text.substr(0, dots));
        const std::size_t hi = parse_count(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("cluster list: range bounds out of order");
        std::vector<std::size_t> values;
        for (std::size_t v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }

    std::vector<std::size_t> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(parse_count(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

}  // namespace clusterbench
