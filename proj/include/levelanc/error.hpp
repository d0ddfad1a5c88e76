#ifndef LEVELANC_ERROR_HPP
#define LEVELANC_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace levelanc {

using NodeId = std::int32_t;
using Depth = std::int32_t;
using Label = std::uint32_t;

inline constexpr NodeId kNoParent = -1;

enum class Errc {
    NoRoot,
    MultipleRoots,
    CycleDetected,
    ParentOutOfRange,
    EdgeCountMismatch,
    DuplicateChild,
    NodeOutOfRange,
    LabelOutOfRange,
    DepthOutOfRange,
    DepthBelowNode,
    KTooLarge,
    InvalidSpec,
    ParseError,
    SnapshotCorrupt,
    IoError,
};

// The stable name of a code, as printed by the CLI ("ERR <name>").
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace levelanc

#endif
