// Named ring presets shared by the CLI and the example catalog.

#ifndef RINGCODES_PRESETS_HPP
#define RINGCODES_PRESETS_HPP

#include <string>

#include "chain_ring.hpp"

namespace ringcodes {

// "f2u", "f4u", "f9u", "f81u", "f169u", "z9", "z25", "z49", or the general
// forms "fqu:p:e" and "zp2:p"
inline RingPtr ring_preset(const std::string& name) {
    if (name == "f2u") return ChainRing::make_fqu(Fq::make(2, 1));
    if (name == "f4u") return ChainRing::make_fqu(Fq::make(2, 2));
    if (name == "f9u") return ChainRing::make_fqu(Fq::make(3, 2));
    if (name == "f25u") return ChainRing::make_fqu(Fq::make(5, 2));
    if (name == "f81u") return ChainRing::make_fqu(Fq::make(3, 4));
    if (name == "f169u") return ChainRing::make_fqu(Fq::make(13, 2));
    if (name == "z9") return ChainRing::make_zp2(3);
    if (name == "z25") return ChainRing::make_zp2(5);
    if (name == "z49") return ChainRing::make_zp2(7);
    if (name.rfind("fqu:", 0) == 0) {
        auto rest = name.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw InternalError("expected fqu:p:e");
        u64 p = std::stoull(rest.substr(0, colon));
        unsigned e = unsigned(std::stoul(rest.substr(colon + 1)));
        return ChainRing::make_fqu(Fq::make(p, e));
    }
    if (name.rfind("zp2:", 0) == 0) return ChainRing::make_zp2(std::stoull(name.substr(4)));
    throw InternalError("unknown ring preset: " + name);
}

}  // namespace ringcodes

#endif
