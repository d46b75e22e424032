package cadence

func (x *handler) run() {
	if x.ready {
		if v.config.EnableReadVisibilityFromES {
			x.apply()
		}
		if v.config.EnableLogCustomerQueryParameter {
			x.apply()
		}
	}
}
