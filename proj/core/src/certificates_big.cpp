#include "ricci/certificates.hpp"

// The two degree-10 elimination certificates for the diagonal (k2 == k3)
// Stiefel family, tabulated in powers of (k2 - 6). Only their coefficient
// sign alternation is load-bearing; see the checksum and alternation tests.

namespace ricci {

namespace {

SignCertificate from_rows(const char* name, const char* const (*rows)[8])
{
    SignCertificate c;
    c.name = name;
    c.params = {"k2"};
    c.shifts = {6};
    c.constraint_desc = "k2 >= 6";
    c.constraint = [](std::span<const long long> p) { return p[0] >= 6; };
    for (int zp = 10; zp >= 0; --zp) {
        SignCertificate::Coefficient coef;
        coef.power = zp;
        const auto& row = rows[10 - zp];
        for (int e = 7; e >= 0; --e) {
            const BigInt v(row[7 - e]);
            if (v != 0) coef.poly.push_back({{e}, v});
        }
        c.coefficients.push_back(std::move(coef));
    }
    c.alternation_claim = true;
    return c;
}

const char* const f2_rows[11][8] = {
    {"2680947582", "14591972187", "59640424960", "180449511648",
     "392350767872", "580027773696", "522221572096", "216162222080"},
    {"-50225598762", "-276982406346", "-1149224425652", "-3535515192656",
     "-7827543360064", "-11798003601664", "-10842357528576", "-4585758048256"},
    {"390159654498", "2172262119880", "9119121333384", "28438722948740",
     "63932956074624", "97997952225152", "91718708609024", "39559071548416"},
    {"-1636143378304", "-9149184702208", "-38667393707288", "-121655123121672",
     "-276434836684176", "-429032167222784", "-407238153983232", "-178416492097536"},
    {"4077237826688", "22741035201568", "96082339120904", "302818376659728",
     "690563967560064", "1077488181695360", "1029907447940096", "455097671436288"},
    {"-6367615594352", "-35174632043952", "-147420550162112", "-461548083948832",
     "-1046969395743360", "-1626943248550784", "-1550563723207680", "-683916568270848"},
    {"6500710198416", "35468514250320", "146902006546624", "454750667573776",
     "1020485202419072", "1569594503117888", "1481383976485632", "647378577709056"},
    {"-4376025268608", "-23628587384704", "-96812750676960", "-296392431072480",
     "-657659598211392", "-1000042532332416", "-933014709911808", "-403027461872640"},
    {"1873316885024", "10053816339984", "40911319513376", "124311949165760",
     "273618707342592", "412536333595392", "381469386539520", "163261397836800"},
    {"-460264120480", "-2465535026848", "-10005481382592", "-30298379604480",
     "-66422377562112", "-99697425799680", "-91739835878400", "-39057790464000"},
    {"49150850208", "263520189632", "1069436792448", "3236342259456",
     "7086348357120", "10618426598400", "9750544128000", "4141186560000"},
};

const char* const f3_rows[11][8] = {
    {"21286672726062828160", "58254716280111893248", "127455519890994757632",
     "217655806674022477824", "279537041132943605760", "253958157960834252800",
     "145499460899831808000", "39531747173990400000"},
    {"-292777902042514008608", "-814588260579033355648", "-1811976784418141538304",
     "-3146205600377563549696", "-4108991272662490095616", "-3796725395351760764928",
     "-2212811038797252526080", "-611729579268322099200"},
    {"1660257266722947751552", "4695714013629690519424", "10616322476744264890880",
     "18734391448720331455488", "24867099690573745029120", "23354475414681440354304",
     "13836689687674552975360", "3889096495709532979200"},
    {"-5079593933368097151208", "-14594154103096371015040", "-33503861421156201380608",
     "-60018579090397951259648", "-80858976481531529269248", "-77073028202750859501568",
     "-46344650438235365801984", "-13221646074705577377792"},
    {"9308466298136566608492", "27115170479328586830320", "63066218770915166201344",
     "114399455055489074824960", "156004137935460456838144", "150475504061699408097280",
     "91547705640188726935552", "26423046593985210351616"},
    {"-11095597642774291380236", "-32642462593282533158032", "-76608697711598428869856",
     "-140125082414737357727872", "-192577122303638985157632", "-187123466429387154372608",
     "-114646689401743117639680", "-33314932853414556467200"},
    {"9347621052101913097360", "27635109722202090645504", "65135190023242223199008",
     "119592275581440467432704", "164920911373642400207616", "160749870833420529548288",
     "98770860152536885063680", "28778321592849865523200"},
    {"-5615419680567151075808", "-16600290237902267697984", "-39112773412702956110336",
     "-71771758931254298414464", "-98898714775619171369216", "-96307590510023343088640",
     "-59111874345673483827200", "-17202705345352952832000"},
    {"2402583297061148772864", "7056849843649244636416", "16525930989063218544768",
     "30148489433708152475392", "41309556136774635555840", "40006454668872611788800",
     "24423031403576407296000", "7069849819878827520000"},
    {"-688999017327743752704", "-1994617060599839321088", "-4609779004452472829952",
     "-8307601122406729420800", "-11253654298468482048000", "-10781346008039639040000",
     "-6514118885048832000000", "-1867029805159833600000"},
    {"109572943236302618624", "309741220607312068608", "700554453138220400640",
     "1237766738525319168000", "1646233648197304320000", "1550332512446054400000",
     "921701573594726400000", "260150759534592000000"},
};

}  // namespace

const SignCertificate& certificate_f2()
{
    static const SignCertificate c = from_rows("F2", f2_rows);
    return c;
}

const SignCertificate& certificate_f3()
{
    static const SignCertificate c = from_rows("F3", f3_rows);
    return c;
}

}  // namespace ricci
