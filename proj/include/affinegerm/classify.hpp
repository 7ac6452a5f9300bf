#pragma once

#include "affinegerm/pencil.hpp"
#include "affinegerm/web.hpp"

#include <string>

namespace ag {

struct ClassificationCertificate {
    Riccati reference;           // induced_riccati(model_pencil(model))
    QComplex nu;                 // residue of beta at the origin
    bool logarithmic = false;    // log terms in the horizontal forms
    QComplex residue;            // residue invariant read from the lower-exponent solution
    FiberNormalForm input_fiber, reference_fiber;
};

struct NormalFormModel {
    AffineModel model;
    MonodromyClass monodromy;
    ClassificationCertificate certificate;
    std::string to_string() const;
};

MonodromyClass monodromy_class(const FiberModel& f);
MonodromyClass monodromy_class(const Riccati& r);
NormalFormModel classify_affine(const Riccati& r);

// W as a union of members of the model pencil: each member is a web of degree
// member_degree, P0 + t Pinf.  t-values are only read off when W is already
// written in the model coordinates and they lie in Q(i).
struct WebDecomposition {
    int member_degree = 0;
    int members = 0;
    bool in_model_coordinates = false;
    std::vector<QComplex> t_values;
};

struct WebClassification {
    WebModel model;
    QComplex nu;
    NormalFormModel affine;
    WebDecomposition decomposition;
    std::string to_string() const;
};

WebClassification classify_web(const ImplicitWeb& w);
WebClassification classify_web(const SplitWeb& w);

}  // namespace ag
