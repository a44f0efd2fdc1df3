from marshmallow import Schema, SchemaOpts, ValidationError, post_dump, pre_load


class NamespaceOpts(SchemaOpts):
    """
    The default class Meta options plus `name` and `plural_name`, the keys a single record and a list of records are
    stored under.
    """

    def __init__(self, meta, **kwargs):
        SchemaOpts.__init__(self, meta, **kwargs)
        self.name = getattr(meta, "name", None)
        self.plural_name = getattr(meta, "plural_name", self.name)


class NamespacedSchema(Schema):
    """Schema of documents `{name: record}` or `{plural_name: [record, ...]}`."""
    OPTIONS_CLASS = NamespaceOpts

    def envelope_key(self, many: bool) -> str:
        return self.opts.plural_name if many else self.opts.name

    @pre_load(pass_many=True)
    def unwrap_envelope(self, data, many, **kwargs):
        key = self.envelope_key(many)
        if not isinstance(data, dict) or key not in data:
            raise ValidationError(f"Expected a document with the key '{key}'.")
        if many and not isinstance(data[key], list):
            raise ValidationError(f"Expected a list of records under '{key}'.")
        return data[key]

    @post_dump(pass_many=True)
    def wrap_with_envelope(self, data, many, **kwargs):
        return {self.envelope_key(many): data}
