#include "levelanc/error.hpp"

namespace levelanc {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NoRoot: return "NoRoot";
        case Errc::MultipleRoots: return "MultipleRoots";
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::ParentOutOfRange: return "ParentOutOfRange";
        case Errc::EdgeCountMismatch: return "EdgeCountMismatch";
        case Errc::DuplicateChild: return "DuplicateChild";
        case Errc::NodeOutOfRange: return "NodeOutOfRange";
        case Errc::LabelOutOfRange: return "LabelOutOfRange";
        case Errc::DepthOutOfRange: return "DepthOutOfRange";
        case Errc::DepthBelowNode: return "DepthBelowNode";
        case Errc::KTooLarge: return "KTooLarge";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::ParseError: return "ParseError";
        case Errc::SnapshotCorrupt: return "SnapshotCorrupt";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& detail) {
    std::string msg(to_string(code));
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}

} // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(format_message(code, detail)), code_(code) {}

} // namespace levelanc
