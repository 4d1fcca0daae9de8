#include "magmakit/error.hpp"

namespace mk {

std::string_view to_string(Errc c) {
    switch (c) {
        case Errc::invalid_magma: return "InvalidMagma";
        case Errc::invalid_params: return "InvalidParams";
        case Errc::invalid_n: return "InvalidN";
        case Errc::not_a_quasigroup: return "NotAQuasigroup";
        case Errc::not_a_loop: return "NotALoop";
        case Errc::not_a_group: return "NotAGroup";
        case Errc::no_identity: return "NoIdentity";
        case Errc::precondition_unmet: return "PreconditionUnmet";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::product_too_large: return "ProductTooLarge";
        case Errc::improper_components: return "ImproperComponents";
        case Errc::insufficient_mix: return "InsufficientMix";
        case Errc::overlap_violation: return "OverlapViolation";
        case Errc::element_absent: return "ElementAbsent";
        case Errc::not_normal: return "NotNormal";
        case Errc::not_a_group_component: return "NotAGroupComponent";
        case Errc::kind_mismatch: return "KindMismatch";
        case Errc::map_incomplete: return "MapIncomplete";
        case Errc::parse_error: return "ParseError";
    }
    return "Error";
}

}  // namespace mk
