#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reedlab {

// Input text could not be decoded. `position` is a byte offset for graph6
// strings and a 1-based line number for dimacs / edge-list input.
class ParseError : public std::runtime_error {
public:
    enum class Position { ByteOffset, LineNumber };

    ParseError(const std::string& message, Position kind, std::size_t position)
        : std::runtime_error(message + (kind == Position::ByteOffset
                                            ? " (byte offset " + std::to_string(position) + ")"
                                            : " (line " + std::to_string(position) + ")")),
          kind_(kind),
          position_(position)
    {
    }

    Position position_kind() const { return kind_; }
    std::size_t position() const { return position_; }

private:
    Position kind_;
    std::size_t position_;
};

// Cooperative deadline exceeded inside an exact search. The library never
// sets deadlines on its own; callers pass them in.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("search deadline exceeded") {}
};

} // namespace reedlab
