package cadence

func (x *handler) run() {
	if x.ready {
		if a.OAuthAuthorizer.Enable {
			x.apply()
		}
		if a.NoopAuthorizer.Enable {
			x.apply()
		}
	}
}
