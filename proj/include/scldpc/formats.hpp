#pragma once

#include <string>

#include "scldpc/code_model.hpp"

namespace scldpc {

enum class TextFormat { hs, hx };

// .hs: line 1 "a c L_h", then a lines with the ascending support of each row.
// .hx: line 1 "c a", then c lines with a entries each; an entry is an
//      ascending comma-separated exponent list or "-" for a null term.
// '#' starts a comment in both formats. ASCII, LF line endings.

SyndromeFormer parse_hs(const std::string& text);
PolyMatrix parse_hx(const std::string& text);

std::string serialize_hs(const SyndromeFormer& hs);
std::string serialize_hx(const PolyMatrix& p);

/// Decides by header shape: 3 fields -> .hs, 2 fields -> .hx.
TextFormat detect_format(const std::string& text);

/// MacKay alist rendering of an expanded window, for interop with external
/// decoders. Columns first ("N M"), indices 1-based, lists zero-padded to the
/// per-side maximum degree.
std::string to_alist(const WindowMatrix& w);

}  // namespace scldpc
