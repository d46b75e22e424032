package cadence

func (x *handler) run() {
	if x.ready {
		if wh.config.EnableClientVersionCheck {
			x.apply()
		}
		if wh.config.EnableQueryAttributeValidation {
			x.apply()
		}
	}
}
