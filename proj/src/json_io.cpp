#include "vna/json_io.hpp"

namespace vna {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json algebra_to_json(const Algebra& a) { return Json(a.blocks()); }

Algebra algebra_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("algebra must be an array of block sizes");
    return Algebra(j.get<std::vector<int>>());
}

Json element_to_json(const Element& x) {
    Json coords = Json::array();
    const Vec v = x.coords();
    for (Eigen::Index i = 0; i < v.size(); ++i) coords.push_back(complex_pair(v[i]));
    return Json{{"algebra", algebra_to_json(x.algebra())}, {"coords", coords}};
}

Element element_from_json(const Json& j) {
    Algebra a = algebra_from_json(j.at("algebra"));
    const Json& coords = j.at("coords");
    if (static_cast<int>(coords.size()) != a.dim())
        throw std::invalid_argument("coordinate length mismatch");
    Vec v(a.dim());
    for (int i = 0; i < a.dim(); ++i) v[i] = complex_from(coords[static_cast<size_t>(i)]);
    return Element::from_coords(a, v);
}

Json linmap_to_json(const LinMap& phi) {
    Json action = Json::array();
    const Mat& m = phi.action();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) action.push_back(complex_pair(m(r, c)));
    return Json{{"domain", algebra_to_json(phi.domain())},
                {"codomain", algebra_to_json(phi.codomain())},
                {"action", action}};
}

LinMap linmap_from_json(const Json& j) {
    Algebra domain = algebra_from_json(j.at("domain"));
    Algebra codomain = algebra_from_json(j.at("codomain"));
    const Json& action = j.at("action");
    if (static_cast<int>(action.size()) != domain.dim() * codomain.dim())
        throw std::invalid_argument("action length mismatch");
    Mat m(codomain.dim(), domain.dim());
    size_t index = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = complex_from(action[index++]);
    return LinMap(std::move(domain), std::move(codomain), std::move(m));
}

Json duplicator_to_json(const Duplicator& dup) {
    return Json{{"delta", linmap_to_json(dup.delta)}, {"unit", element_to_json(dup.unit)}};
}

Duplicator duplicator_from_json(const Json& j) {
    return Duplicator{linmap_from_json(j.at("delta")), element_from_json(j.at("unit"))};
}

Json report_to_json(const Report& report) {
    Json out = Json::array();
    for (const CheckResult& c : report.checks) {
        Json entry{{"check", c.check}, {"pass", c.pass}};
        if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace vna
