#pragma once

#include "affinegerm/forms.hpp"

#include <string>

namespace ag {

// One-variable jets are LaurentJets in x.

struct PowerConjugation {
    LaurentJet phi;  // x * u(x)
    QComplex scale;  // h(0); phi^nu = x^nu h / scale
};

// phi = x * (h / h(0))^(1/nu).
PowerConjugation conjugate_power_function(const QComplex& nu, const LaurentJet& h);

struct OneFormModel {
    enum class Kind { PowerForm, LogPole, HigherPole } kind = Kind::PowerForm;
    QComplex nu;      // PowerForm
    int n = 0;        // HigherPole
    QComplex coeff;   // PowerForm: c x^nu dx; HigherPole: c dx/x^n
    QComplex lambda;  // residue
    std::string to_string() const;
};

struct OneFormNormalization {
    OneFormModel model;
    LaurentJet phi;
};

// omega = x^nu u(x) dx with u(0) != 0.  phi^*(model) == omega.
OneFormNormalization normalize_one_form(const QComplex& nu, const LaurentJet& u);

// Branch for nu not a negative integer: phi = x e^g with
// (k + nu + 1) g_k = [e^{-(nu+1) g_{<k}} u / u(0)]_k.
LaurentJet briot_bouquet_phi(const QComplex& nu, const LaurentJet& u);

// x^nu u(x) dx written in the variable y, and the model forms likewise.
Form1 one_form_in_y(const QComplex& nu, const LaurentJet& u);
Form1 model_form_in_y(const OneFormModel& m, int order = default_order());
// Pulls back a form in y along y -> phi(y).
Form1 pullback_1d(const Form1& w, const LaurentJet& phi);

// Vanishing order of df ^ dg along y = 0.
int tangency_order(const TransJet& f, const TransJet& g);

}  // namespace ag
