#include "tempwave/quadrature.hpp"

#include <array>

namespace tempwave {

namespace {

// Nodes/weights on [-1, 1], symmetric; values beyond double precision.
constexpr std::array<double, 1> kNodes1 = {0.0};
constexpr std::array<double, 1> kWeights1 = {2.0};

constexpr std::array<double, 2> kNodes2 = {-0.5773502691896257645, 0.5773502691896257645};
constexpr std::array<double, 2> kWeights2 = {1.0, 1.0};

constexpr std::array<double, 4> kNodes4 = {
    -0.8611363115940525752, -0.3399810435848562648,
    0.3399810435848562648, 0.8611363115940525752};
constexpr std::array<double, 4> kWeights4 = {
    0.3478548451374538574, 0.6521451548625461426,
    0.6521451548625461426, 0.3478548451374538574};

constexpr std::array<double, 8> kNodes8 = {
    -0.9602898564975362317, -0.7966664774136267395, -0.5255324099163289858,
    -0.1834346424956498049, 0.1834346424956498049, 0.5255324099163289858,
    0.7966664774136267395, 0.9602898564975362317};
constexpr std::array<double, 8> kWeights8 = {
    0.1012285362903762592, 0.2223810344533744705, 0.3137066458778872873,
    0.3626837833783619830, 0.3626837833783619830, 0.3137066458778872873,
    0.2223810344533744705, 0.1012285362903762592};

}  // namespace

GaussRule gauss_rule(std::size_t order) {
    switch (order) {
        case 1:
            return {kNodes1, kWeights1};
        case 2:
            return {kNodes2, kWeights2};
        case 4:
            return {kNodes4, kWeights4};
        case 8:
            return {kNodes8, kWeights8};
        default:
            fail(ErrorKind::config, "gauss_rule: supported orders are 1, 2, 4, 8");
    }
}

}  // namespace tempwave
