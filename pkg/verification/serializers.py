from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from lib.algebra.invariants import format_numerator
from lib.algebra.predictor import FactorSignature


class ExactValueField(serializers.Field):
    """Field elements as strings: ``"3"``, ``"-1/2"``."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        return data


# Input validation ---------------------------------------------------------

class FactorSignatureSerializer(serializers.Serializer):
    r = serializers.IntegerField(min_value=1)
    d = serializers.IntegerField(min_value=1)
    h = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate(self, attrs):
        h = attrs.get('h')
        if h is not None and h < attrs['r']:
            raise serializers.ValidationError("h must be at least r")
        return attrs

    def create(self, validated_data):
        return FactorSignature(validated_data['r'], validated_data['d'], validated_data.get('h'))


class ScenarioOptionsSerializer(serializers.Serializer):
    truncate = serializers.IntegerField(min_value=1, required=False)
    seed = serializers.IntegerField(min_value=0, max_value=2 ** 64 - 1, required=False)
    budget = serializers.IntegerField(min_value=1, required=False)


class SuiteConfigSerializer(serializers.Serializer):
    signatures = serializers.ListField(child=FactorSignatureSerializer(), min_length=2)
    ambients = serializers.ListField(child=serializers.IntegerField(min_value=1), min_length=1)
    seeds = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=1)

    def __init__(self, *args, max_sum_r=4, max_degree=3, max_ambient=12, **kwargs):
        super().__init__(*args, **kwargs)
        self.bounds = (max_sum_r, max_degree, max_ambient)

    def validate(self, attrs):
        max_sum_r, max_degree, max_ambient = self.bounds
        if sum(s['r'] for s in attrs['signatures']) > max_sum_r:
            raise serializers.ValidationError(f"sum of r exceeds {max_sum_r}")
        if max(s['d'] for s in attrs['signatures']) > max_degree:
            raise serializers.ValidationError(f"a degree exceeds {max_degree}")
        if max(attrs['ambients']) > max_ambient:
            raise serializers.ValidationError(f"an ambient dimension exceeds {max_ambient}")
        return attrs


def first_error(errors):
    """Flatten DRF validation errors into one readable line."""
    if isinstance(errors, dict):
        for key, value in errors.items():
            inner = first_error(value)
            return inner if key == 'non_field_errors' else f"{key}: {inner}"
    if isinstance(errors, list) and errors:
        return first_error(errors[0])
    return str(errors)


# Reports ------------------------------------------------------------------

class InvariantReportSerializer(serializers.Serializer):
    ambient = serializers.IntegerField()
    dimension = serializers.IntegerField()
    degree = serializers.IntegerField(allow_null=True)
    hilbert_function = serializers.ListField(child=serializers.IntegerField())
    hilbert_numerator = serializers.ListField(child=serializers.IntegerField())
    numerator = serializers.SerializerMethodField()

    def get_numerator(self, obj):
        return format_numerator(obj.hilbert_numerator)


class SingularReportSerializer(serializers.Serializer):
    smooth = serializers.BooleanField()
    method = serializers.CharField()
    dimension = serializers.IntegerField(source='invariants.dimension')
    degree = serializers.IntegerField(source='invariants.degree', allow_null=True)


class SignatureSerializer(serializers.Serializer):
    r = serializers.IntegerField()
    d = serializers.IntegerField()
    h = serializers.IntegerField()
    degree = serializers.IntegerField()


class FactorSerializer(serializers.Serializer):
    name = serializers.CharField()
    kind = serializers.CharField()
    signature = SignatureSerializer()
    invariants = InvariantReportSerializer()


class ComputedSerializer(serializers.Serializer):
    ambient = serializers.IntegerField()
    field = serializers.CharField()
    mode = serializers.CharField()
    factors = FactorSerializer(many=True)
    product = InvariantReportSerializer()
    ideal = serializers.ListField(child=serializers.CharField())
    singular = SingularReportSerializer(allow_null=True)
    primes = serializers.ListField(child=serializers.IntegerField())


class TableHitSerializer(serializers.Serializer):
    table = serializers.CharField()
    row = serializers.CharField()
    inequality = serializers.CharField()
    holds = serializers.BooleanField()


class PredictionSerializer(serializers.Serializer):
    mode = serializers.CharField()
    ambient = serializers.IntegerField()
    threshold = serializers.IntegerField()
    regime = serializers.CharField()
    exceeds_sum = serializers.BooleanField()
    dimension = serializers.IntegerField(allow_null=True)
    degree = serializers.IntegerField(allow_null=True)
    hf_relation = serializers.CharField(allow_null=True)
    secant_dimension = serializers.IntegerField(allow_null=True)
    smoothness = serializers.CharField()
    singular_bound = serializers.IntegerField(allow_null=True)
    table_hits = TableHitSerializer(many=True)
    theorems = serializers.ListField(child=serializers.CharField())


class VerdictSerializer(serializers.Serializer):
    claim = serializers.CharField()
    status = serializers.CharField()
    expected = serializers.CharField(allow_null=True)
    observed = serializers.CharField(allow_null=True)
    note = serializers.CharField(allow_blank=True)
    strict = serializers.BooleanField()


class MatrixCertificateSerializer(serializers.Serializer):
    rows = serializers.ListField(child=serializers.ListField(child=ExactValueField()))
    rank = serializers.IntegerField()
    determinant = ExactValueField(allow_null=True)


class CenterCertificateSerializer(serializers.Serializer):
    rank = serializers.IntegerField()
    maximal_rank = serializers.IntegerField()
    center_dimension = serializers.IntegerField()
    center = serializers.ListField(child=serializers.CharField())
    center_meets_segre = serializers.BooleanField(allow_null=True)
    points_in_segre = serializers.ListField(child=serializers.BooleanField())


class EquivalenceSerializer(serializers.Serializer):
    m_prime_rank = serializers.IntegerField()
    completed = serializers.BooleanField()
    determinant_nonzero = serializers.BooleanField()
    substitution_vanishes = serializers.BooleanField(allow_null=True)
    hf_equal = serializers.BooleanField()
    holds = serializers.BooleanField()


class SecantSerializer(serializers.Serializer):
    formula = serializers.IntegerField()
    sampled = serializers.IntegerField()
    method = serializers.CharField()


class CertificatesSerializer(serializers.Serializer):
    genericity = serializers.CharField()
    m_prime = MatrixCertificateSerializer(allow_null=True)
    coefficient_points = CenterCertificateSerializer(allow_null=True)
    equivalence = EquivalenceSerializer(allow_null=True)
    secant = SecantSerializer(allow_null=True)


class ComparisonReportSerializer(serializers.Serializer):
    computed = ComputedSerializer()
    predicted = PredictionSerializer(allow_null=True)
    verdicts = VerdictSerializer(many=True)
    certificates = CertificatesSerializer()


class SuiteInstanceSerializer(serializers.Serializer):
    index = serializers.IntegerField()
    signatures = serializers.ListField(child=serializers.CharField())
    ambient = serializers.IntegerField()
    seed = serializers.IntegerField()
    status = serializers.CharField()
    mismatches = serializers.ListField(child=serializers.CharField())
    note = serializers.CharField(allow_blank=True)


class SuiteReportSerializer(serializers.Serializer):
    passed = serializers.IntegerField()
    failed = serializers.IntegerField()
    errors = serializers.IntegerField()
    not_generic = serializers.IntegerField()
    instances = SuiteInstanceSerializer(many=True)


def render_json(data):
    """Serialized data as indented JSON text."""
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


class IdealSerializer(serializers.Serializer):
    name = serializers.CharField()
    generators = serializers.ListField(child=serializers.CharField())


class NamedInvariantsSerializer(serializers.Serializer):
    name = serializers.CharField()
    invariants = InvariantReportSerializer()


class NamedSingularSerializer(serializers.Serializer):
    name = serializers.CharField()
    singular = SingularReportSerializer()
    generators = serializers.ListField(child=serializers.CharField())


class SweepSerializer(serializers.Serializer):
    rows = serializers.IntegerField()
    failures = serializers.ListField(child=serializers.CharField())


class SampleSerializer(serializers.Serializer):
    certified = serializers.BooleanField()
    rank = serializers.IntegerField()
    attempts = serializers.IntegerField()
    scenario = serializers.CharField()
